#pragma once

#include "hjf/adjoint.hpp"
#include "hjf/arith.hpp"
#include "hjf/bernoulli.hpp"
#include "hjf/classical.hpp"
#include "hjf/document.hpp"
#include "hjf/errors.hpp"
#include "hjf/heat.hpp"
#include "hjf/hermitian.hpp"
#include "hjf/modforms.hpp"
#include "hjf/number_theory.hpp"
#include "hjf/qseries.hpp"
#include "hjf/report.hpp"
#include "hjf/theta.hpp"
