#pragma once

#include "catalan.hpp"
#include "density.hpp"
#include "eertree.hpp"
#include "exact.hpp"
#include "fibonacci.hpp"
#include "fuzzy.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "palindromes.hpp"
#include "quadrature.hpp"
#include "squarefree.hpp"
#include "verify.hpp"
#include "words.hpp"
