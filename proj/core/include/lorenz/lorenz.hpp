#pragma once

#include "lorenz/asymptotics.hpp"
#include "lorenz/beta.hpp"
#include "lorenz/chart.hpp"
#include "lorenz/comparison.hpp"
#include "lorenz/curve.hpp"
#include "lorenz/dataset.hpp"
#include "lorenz/empirical.hpp"
#include "lorenz/error.hpp"
#include "lorenz/extremal.hpp"
#include "lorenz/gb2.hpp"
#include "lorenz/indices.hpp"
#include "lorenz/random.hpp"
#include "lorenz/synthetic.hpp"
