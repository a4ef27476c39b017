#pragma once

#include "avoid/bounds.hpp"
#include "avoid/factor_index.hpp"
#include "avoid/formula.hpp"
#include "avoid/free_words.hpp"
#include "avoid/freeness.hpp"
#include "avoid/morphism.hpp"
#include "avoid/occurrence.hpp"
#include "avoid/rational.hpp"
#include "avoid/rauzy.hpp"
#include "avoid/replay.hpp"
#include "avoid/word.hpp"
