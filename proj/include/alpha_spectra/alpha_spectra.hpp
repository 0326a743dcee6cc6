#pragma once

#include "char_poly.hpp"
#include "closed_form.hpp"
#include "coronal.hpp"
#include "cospectral.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "jacobi.hpp"
#include "joins.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "spectrum.hpp"
#include "verify.hpp"
