#pragma once

#include <hyperspec/bigint.hpp>
#include <hyperspec/cyclotomic.hpp>
#include <hyperspec/determinant.hpp>
#include <hyperspec/distribution.hpp>
#include <hyperspec/errors.hpp>
#include <hyperspec/hypermatrix.hpp>
#include <hyperspec/multivariate.hpp>
#include <hyperspec/polynomial.hpp>
#include <hyperspec/resultants.hpp>
#include <hyperspec/serialize.hpp>
#include <hyperspec/spectra.hpp>
#include <hyperspec/walks.hpp>
