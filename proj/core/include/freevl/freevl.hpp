#ifndef FREEVL_FREEVL_HPP
#define FREEVL_FREEVL_HPP

#include "freevl/errors.hpp"
#include "freevl/expr.hpp"
#include "freevl/fourier_motzkin.hpp"
#include "freevl/freeset.hpp"
#include "freevl/hom.hpp"
#include "freevl/lp.hpp"
#include "freevl/normal_form.hpp"
#include "freevl/norms.hpp"
#include "freevl/order.hpp"
#include "freevl/parse.hpp"
#include "freevl/rational.hpp"
#include "freevl/vector.hpp"

#endif  // FREEVL_FREEVL_HPP
