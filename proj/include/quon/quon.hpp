#pragma once

#include "quon/bounds.hpp"
#include "quon/character_table.hpp"
#include "quon/composite.hpp"
#include "quon/config.hpp"
#include "quon/errors.hpp"
#include "quon/fock.hpp"
#include "quon/permutation.hpp"
#include "quon/qpoly.hpp"
#include "quon/wick.hpp"
