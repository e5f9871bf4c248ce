#pragma once

#include "hookschur/characters.hpp"
#include "hookschur/complexes.hpp"
#include "hookschur/ffield.hpp"
#include "hookschur/fp_matrix.hpp"
#include "hookschur/ktheory.hpp"
#include "hookschur/multilinear.hpp"
#include "hookschur/schur.hpp"
