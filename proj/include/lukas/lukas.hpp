#pragma once

/**
 * @file lukas.hpp
 * @brief Umbrella header.
 */

#include "lukas/algebra/coeff_table.hpp"
#include "lukas/algebra/number.hpp"
#include "lukas/algebra/ring.hpp"
#include "lukas/algebra/weight_poly.hpp"
#include "lukas/errors.hpp"
#include "lukas/io/json.hpp"
#include "lukas/operators/charpoly.hpp"
#include "lukas/operators/hessenberg.hpp"
#include "lukas/paths/enumerate.hpp"
#include "lukas/paths/genetic.hpp"
#include "lukas/paths/lattice_path.hpp"
#include "lukas/series/family.hpp"
#include "lukas/series/laurent.hpp"
#include "lukas/vcf/continued_fraction.hpp"
#include "lukas/vcf/identities.hpp"
#include "lukas/vcf/report.hpp"
