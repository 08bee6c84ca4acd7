#ifndef ODDCHAIN_ODDCHAIN_HPP
#define ODDCHAIN_ODDCHAIN_HPP

#include "error.hpp"
#include "rational.hpp"
#include "groups.hpp"
#include "elem.hpp"
#include "algebra.hpp"
#include "core.hpp"
#include "plp.hpp"
#include "literals.hpp"
#include "towers.hpp"
#include "sampling.hpp"
#include "io.hpp"
#include "logic.hpp"
#include "verify.hpp"

#endif // ODDCHAIN_ODDCHAIN_HPP
