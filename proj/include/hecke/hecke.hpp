#pragma once

#include "hecke/bases.hpp"
#include "hecke/combinatorics.hpp"
#include "hecke/matrix.hpp"
#include "hecke/params.hpp"
#include "hecke/report.hpp"
#include "hecke/representation.hpp"
#include "hecke/scalar.hpp"
#include "hecke/seminormal.hpp"
#include "hecke/verify.hpp"
