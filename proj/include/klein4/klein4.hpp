#pragma once

// Umbrella header: exact classification of the indecomposable Klein-four
// subgroups of GL(m, K) for K the integers, the 2-local integers and the
// 2-adic integers.

#include "klein4/algebra.hpp"
#include "klein4/automorphism.hpp"
#include "klein4/classify.hpp"
#include "klein4/constructors.hpp"
#include "klein4/f2_matrix.hpp"
#include "klein4/f2poly.hpp"
#include "klein4/int_matrix.hpp"
#include "klein4/integer_kernel.hpp"
#include "klein4/json_io.hpp"
#include "klein4/quiver.hpp"
#include "klein4/representation.hpp"
#include "klein4/verify.hpp"
