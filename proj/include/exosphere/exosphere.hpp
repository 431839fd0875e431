#pragma once

#include "exosphere/actions.hpp"
#include "exosphere/bernoulli.hpp"
#include "exosphere/integer.hpp"
#include "exosphere/kervaire_milnor.hpp"
#include "exosphere/numtheory.hpp"
#include "exosphere/stem_data.hpp"
#include "exosphere/table.hpp"
