#pragma once

#include "check.hpp"
#include "constructions.hpp"
#include "counter.hpp"
#include "engine.hpp"
#include "errors.hpp"
#include "free_group.hpp"
#include "io.hpp"
#include "linalg.hpp"
#include "machine.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "stern_brocot.hpp"
#include "symbols.hpp"
#include "zoo.hpp"
