#pragma once

#include "gtpoly/elliptic.hpp"
#include "gtpoly/error.hpp"
#include "gtpoly/face_ring.hpp"
#include "gtpoly/grothendieck.hpp"
#include "gtpoly/io.hpp"
#include "gtpoly/matrix.hpp"
#include "gtpoly/matroid.hpp"
#include "gtpoly/module.hpp"
#include "gtpoly/polynomial.hpp"
#include "gtpoly/poset.hpp"
#include "gtpoly/random.hpp"
#include "gtpoly/ring.hpp"
#include "gtpoly/tutte.hpp"
