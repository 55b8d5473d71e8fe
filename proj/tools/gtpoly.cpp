// gtpoly: command-line front end for Grothendieck-Tutte computations.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gtpoly/gtpoly.hpp"

using namespace gtpoly;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2, over_budget = 3 };

struct Options {
  std::string instance;
  std::string ring_override;
  std::size_t node_budget = default_node_budget;
  unsigned long seed = 1;
  std::size_t count = 50;
  std::string format = "text";
  std::string out;
  bool dot = false;
};

std::string vec_string(const std::vector<mpz_class>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

json vec_json(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

template <SupportedRing R>
int cmd_tutte(const RealizedMatroid<R>& m, const Options& o, std::ostream& out) {
  auto t = grothendieck_tutte(m);
  auto tn = phi_tilde(t);
  if (o.format == "json") {
    out << json{{"ring", std::string(R::name)}, {"grothendieck_tutte", to_json(t)}, {"tutte_numeric", to_json(tn)},
                {"text", {{"T", t.to_string()}, {"T~", tn.to_string()}}}}
               .dump(2)
        << "\n";
  } else {
    out << "T  = " << t.to_string() << "\n";
    out << "T~ = " << tn.to_string() << "\n";
  }
  return ok;
}

template <SupportedRing R>
int cmd_fvector(const RealizedMatroid<R>& m, const Options& o, std::ostream& out) {
  auto f = f_vector(m);
  auto fh = numeric_f_h(m);
  if (o.format == "json") {
    json g = json::array();
    for (const auto& e : f.entries) g.push_back(to_json(e));
    out << json{{"ring", std::string(R::name)}, {"grothendieck_f", g}, {"f", vec_json(fh.f)}, {"h", vec_json(fh.h)}, {"text", f.to_string()}}.dump(2)
        << "\n";
  } else {
    out << "Grothendieck f = " << f.to_string() << "\n";
    out << "f = " << vec_string(fh.f) << "\n";
    out << "h = " << vec_string(fh.h) << "\n";
  }
  return ok;
}

template <SupportedRing R>
int cmd_poset(const RealizedMatroid<R>& m, const Options& o, std::ostream& out) {
  auto p = build_poset(m, o.node_budget);
  if (o.dot || o.format == "dot") {
    out << poset_to_dot(p);
  } else if (o.format == "json") {
    out << to_json(p).dump(2) << "\n";
  } else {
    out << p.size() << " nodes, " << p.covers().size() << " covers, " << poset_components(p).size() << " component(s)\n";
    out << "f = " << vec_string(poset_f_vector(p)) << "\n";
    for (auto [lo, hi] : p.covers()) out << p.label(lo) << " < " << p.label(hi) << "\n";
  }
  return ok;
}

template <SupportedRing R>
int cmd_hilbert(const RealizedMatroid<R>& m, const Options& o, std::ostream& out) {
  auto n = face_module_hilbert(m, o.node_budget);
  if (o.format == "json") {
    json j = {{"ring", std::string(R::name)}, {"face_module", to_json(n)}};
    auto comps = poset_components(build_poset(m, o.node_budget));
    j["face_ideal"] = face_ideal(comps.front()).to_string();
    out << j.dump(2) << "\n";
  } else {
    out << "N_M(t) = " << n.to_string() << "\n";
  }
  return ok;
}

template <SupportedRing R>
int cmd_elliptic(const RealizedMatroid<R>& m, const Options& o, std::ostream& out) {
  if (m.forced().cols() != 0) throw invalid_input("elliptic arrangements take no torsion_at_empty");
  EllipticArrangement<R> e{m.matrix()};
  auto te = elliptic_tutte(e);
  auto b = bibby_series(e);
  auto chi = euler_characteristic(e);
  if (o.format == "json") {
    out << json{{"ring", std::string(R::name)}, {"elliptic_tutte", to_json(te)}, {"bibby_series", to_json(b)}, {"euler_characteristic", chi.get_str()}}
               .dump(2)
        << "\n";
  } else {
    out << "T^e = " << te.to_string() << "\n";
    out << "A(t) = " << b.to_string_ascending('t') << "\n";
    out << "chi = " << chi.get_str() << "\n";
  }
  return ok;
}

// All suites on one matroid. Budget refusals are recorded as skips.
template <SupportedRing R>
std::vector<CheckReport> run_checks(const RealizedMatroid<R>& m, std::size_t node_budget, bool& refused) {
  std::vector<CheckReport> reps;
  reps.push_back(check_deletion_contraction(m));
  reps.push_back(check_tutte_f_identity(m));
  if (m.forced().cols() != 0) reps.push_back(check_quotient_lemma(m));
  CheckReport ax;
  ax.name = "axioms";
  for (Subset a = 0; a <= m.ground(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b)
      for (std::size_t c = b + 1; c < m.size(); ++c) {
        if (contains(a, b) || contains(a, c)) continue;
        auto r = m.axiom_consistency_check(a, b, c);
        if (!r.pass) ax.record(false, subset_to_string(a, m.labels()) + ": " + r.detail);
        else ++ax.checked;
      }
    if (a == m.ground()) break;
  }
  if (ax.pass) ax.lines.push_back("ok    " + std::to_string(ax.checked) + " (A, b, c) triples");
  reps.push_back(ax);
  try {
    auto p = build_poset(m, node_budget);
    auto s = verify_simplicial(p);
    CheckReport fv;
    fv.name = "poset-f";
    auto pf = poset_f_vector(p);
    auto gf = f_vector(m).numeric();
    fv.record(pf == gf, "poset f " + vec_string(pf) + " vs phi(Grothendieck f) " + vec_string(gf));
    auto comps = poset_components(p);
    fv.record(comps.size() == torsion_cardinality(m.class_of(0)),
              std::to_string(comps.size()) + " component(s), |tor(∅)| = " + torsion_cardinality(m.class_of(0)).get_str());
    reps.push_back(s);
    reps.push_back(fv);
    reps.push_back(verify_hilbert_tutte(m, node_budget));
  } catch (const budget_exceeded& e) {
    refused = true;
    CheckReport skip;
    skip.name = "poset";
    skip.skip(std::string("not materialized: ") + e.what());
    reps.push_back(skip);
  }
  return reps;
}

int emit_reports(const std::vector<CheckReport>& reps, bool refused, const Options& o, std::ostream& out) {
  bool pass = true;
  for (const auto& r : reps) pass = pass && r.pass;
  if (o.format == "json") {
    json j = json::array();
    for (const auto& r : reps) j.push_back(to_json(r));
    out << json{{"pass", pass}, {"budget_refused", refused}, {"suites", j}}.dump(2) << "\n";
  } else {
    for (const auto& r : reps) {
      out << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.name << "\n";
      for (const auto& l : r.lines) out << "    " << l << "\n";
    }
    out << (pass ? "all checks passed" : "some checks FAILED") << (refused ? " (poset suites refused by budget)" : "") << "\n";
  }
  if (!pass) return check_failed;
  return refused ? over_budget : ok;
}

template <SupportedRing R>
int cmd_check(const RealizedMatroid<R>& m, const Options& o, std::ostream& out) {
  bool refused = false;
  auto reps = run_checks(m, o.node_budget, refused);
  return emit_reports(reps, refused, o, out);
}

int cmd_selftest(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::vector<CheckReport> summary;
  std::size_t refused_count = 0;
  auto suite = [&]<class R>(R, const char* label, std::size_t torsion_rows) {
    CheckReport total;
    total.name = std::string(label) + (torsion_rows ? " with torsion at ∅" : "");
    for (std::size_t k = 0; k < o.count; ++k) {
      auto inst = random_instance<R>(rng, {}, torsion_rows);
      bool refused = false;
      auto reps = run_checks(inst.matroid(), o.node_budget, refused);
      if (refused) ++refused_count;
      for (const auto& r : reps) {
        if (r.pass) {
          total.checked += r.checked;
          total.skipped += r.skipped;
          continue;
        }
        total.record(false, "instance " + std::to_string(k) + " " + inst.matrix.to_string() + ": " + r.name);
      }
    }
    if (total.pass) total.lines.push_back("ok    " + std::to_string(o.count) + " instances");
    summary.push_back(total);
  };
  suite(Integers{}, "Z", 0);
  suite(Gaussian{}, "Z[i]", 0);
  suite(Eisenstein{}, "Z[w]", 0);
  suite(Integers{}, "Z", 1);
  bool refused = refused_count > 0;
  if (refused && o.format != "json") out << refused_count << " instance(s) had the poset refused by the node budget\n";
  int code = emit_reports(summary, false, o, out);
  return code;
}

template <class F>
int with_matroid(const Options& o, F&& f) {
  Instance inst = load_instance(o.instance);
  if (!o.ring_override.empty()) {
    parse_ring_kind(o.ring_override);
    inst.ring = o.ring_override;
  }
  return visit_ring(inst.ring_kind(), [&]<class R>(R) { return f(inst.matroid<R>()); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grothendieck-Tutte polynomials of matroids over Z, Z[i] and Z[w]"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--ring-override", o.ring_override, "Treat the instance as over this ring (Z, Z[i], Z[w])");
  app.add_option("--node-budget", o.node_budget, "Largest poset of torsions to materialize")->capture_default_str();
  app.add_option("--seed", o.seed, "Seed for selftest instances")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "dot"}))->capture_default_str();
  app.add_option("--out", o.out, "Write output to this file instead of stdout");

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("instance", o.instance, "Instance JSON file")->required();
    return sub;
  };
  auto* tutte = add("tutte", "Grothendieck-Tutte polynomial and its numeric image");
  auto* fvec = add("fvector", "Grothendieck f-vector and numeric f/h-vectors");
  auto* poset = add("poset", "Poset of torsions (text, JSON or DOT)");
  poset->add_flag("--dot", o.dot, "Same as --format dot");
  auto* hilbert = add("hilbert", "Hilbert series of the face module");
  auto* elliptic = add("elliptic", "Elliptic Tutte polynomial, Bibby series, Euler characteristic");
  auto* check = add("check", "Run every verification suite on the instance");
  auto* selftest = app.add_subcommand("selftest", "Run the verification suites on seeded random instances");
  selftest->add_option("--count", o.count, "Instances per ring")->capture_default_str();
  selftest->add_option("--seed", o.seed, "Seed for the generated instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  std::ostringstream buf;
  int code = ok;
  try {
    if (*selftest) {
      code = cmd_selftest(o, buf);
    } else {
      code = with_matroid(o, [&]<class R>(const RealizedMatroid<R>& m) {
        if (*tutte) return cmd_tutte(m, o, buf);
        if (*fvec) return cmd_fvector(m, o, buf);
        if (*poset) return cmd_poset(m, o, buf);
        if (*hilbert) return cmd_hilbert(m, o, buf);
        if (*elliptic) return cmd_elliptic(m, o, buf);
        if (*check) return cmd_check(m, o, buf);
        return static_cast<int>(input_error);
      });
    }
  } catch (const budget_exceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return over_budget;
  } catch (const invalid_input& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return check_failed;
  }

  if (o.out.empty()) {
    std::cout << buf.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "input error: cannot write " << o.out << "\n";
      return input_error;
    }
    f << buf.str();
  }
  return code;
}
