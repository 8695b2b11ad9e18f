#pragma once

#include "decision_tree.hpp"
#include "display.hpp"
#include "eff.hpp"
#include "laws.hpp"
#include "lifted.hpp"
#include "pflp.hpp"
#include "search.hpp"
#include "sortlab.hpp"
#include "studies.hpp"
