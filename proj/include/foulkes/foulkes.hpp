#pragma once

#include "foulkes/characters.hpp"
#include "foulkes/diagram.hpp"
#include "foulkes/error.hpp"
#include "foulkes/foulkes_module.hpp"
#include "foulkes/int_matrix.hpp"
#include "foulkes/integer_partition.hpp"
#include "foulkes/limits.hpp"
#include "foulkes/plethysm.hpp"
#include "foulkes/scalar.hpp"
#include "foulkes/set_partition.hpp"
#include "foulkes/tensor_oracle.hpp"
#include "foulkes/verify.hpp"
