#pragma once

#include "inclogic/error.hpp"
#include "inclogic/io.hpp"
#include "inclogic/lax_checker.hpp"
#include "inclogic/model_check.hpp"
#include "inclogic/oracle.hpp"
#include "inclogic/reductions.hpp"
#include "inclogic/semantics.hpp"
#include "inclogic/strict_checker.hpp"
#include "inclogic/structures.hpp"
#include "inclogic/syntax.hpp"
#include "inclogic/tarski.hpp"
#include "inclogic/validity.hpp"
#include "inclogic/world_set.hpp"
