// Umbrella header.

#pragma once

#include "twa/alphabet.hh"
#include "twa/automaton.hh"
#include "twa/engine.hh"
#include "twa/examples.hh"
#include "twa/format.hh"
#include "twa/oracle.hh"
#include "twa/reductions.hh"
