// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "sublrc/arraycode.hpp"
#include "sublrc/designs.hpp"
#include "sublrc/error.hpp"
#include "sublrc/gf.hpp"
#include "sublrc/io.hpp"
#include "sublrc/limits.hpp"
#include "sublrc/linalg.hpp"
#include "sublrc/locality.hpp"
