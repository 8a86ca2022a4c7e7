#pragma once

#include "sadic/alphabet.hpp"
#include "sadic/constructions.hpp"
#include "sadic/directive.hpp"
#include "sadic/errors.hpp"
#include "sadic/language.hpp"
#include "sadic/matrix.hpp"
#include "sadic/measures.hpp"
#include "sadic/morphism.hpp"
#include "sadic/rational.hpp"
#include "sadic/recognizability.hpp"
#include "sadic/serialize.hpp"
#include "sadic/subdivision.hpp"
#include "sadic/towers.hpp"
#include "sadic/word.hpp"
