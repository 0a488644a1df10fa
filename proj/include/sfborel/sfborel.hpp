#ifndef SFBOREL_SFBOREL_HPP
#define SFBOREL_SFBOREL_HPP

#include "sfborel/rational.hpp"
#include "sfborel/monomial.hpp"
#include "sfborel/assoc_primes.hpp"
#include "sfborel/covering_lp.hpp"
#include "sfborel/waldschmidt.hpp"
#include "sfborel/symbolic_oracle.hpp"

#endif  // SFBOREL_SFBOREL_HPP
