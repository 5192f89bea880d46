#pragma once

#include "coxeter.hpp"
#include "hecke.hpp"
#include "linalg.hpp"
#include "laurent.hpp"
#include "schur.hpp"
#include "super.hpp"
#include "supercells.hpp"
#include "tableaux.hpp"
#include "tensor.hpp"
#include "verify.hpp"
