#ifndef LRALG_LRALG_HPP
#define LRALG_LRALG_HPP

#include <lralg/rational.hpp>
#include <lralg/errors.hpp>
#include <lralg/linalg.hpp>
#include <lralg/bilinear.hpp>
#include <lralg/lie_algebra.hpp>
#include <lralg/lr_algebra.hpp>
#include <lralg/constructions.hpp>
#include <lralg/extensions.hpp>
#include <lralg/catalog.hpp>
#include <lralg/polynomial.hpp>
#include <lralg/groebner.hpp>
#include <lralg/constraints.hpp>
#include <lralg/iso.hpp>
#include <lralg/io.hpp>

#endif  // LRALG_LRALG_HPP
