#pragma once

#include "bounds.hpp"
#include "census.hpp"
#include "cli.hpp"
#include "error.hpp"
#include "flag_decomp.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "random.hpp"
#include "report.hpp"
#include "scalar.hpp"
#include "secant_dim.hpp"
#include "tensor3.hpp"
#include "varieties.hpp"
#include "witness.hpp"
