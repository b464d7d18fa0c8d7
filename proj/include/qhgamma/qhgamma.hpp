#pragma once

// Umbrella header: exact quantum-homology algebras, Seidel elements, the
// spectral pseudo-norm Gamma, mu-sweeps, and the verification registry.

#include <qhgamma/affine.hpp>
#include <qhgamma/algebra.hpp>
#include <qhgamma/emit.hpp>
#include <qhgamma/errors.hpp>
#include <qhgamma/novikov.hpp>
#include <qhgamma/oracle.hpp>
#include <qhgamma/rational.hpp>
#include <qhgamma/seidel.hpp>
#include <qhgamma/sweep.hpp>
#include <qhgamma/verify.hpp>
