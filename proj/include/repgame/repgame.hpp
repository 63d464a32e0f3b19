#pragma once

#include "repgame/classifier.hpp"
#include "repgame/engine.hpp"
#include "repgame/errors.hpp"
#include "repgame/game.hpp"
#include "repgame/geometry.hpp"
#include "repgame/oracle.hpp"
#include "repgame/rational.hpp"
#include "repgame/schedule.hpp"
#include "repgame/strategies.hpp"
#include "repgame/turing.hpp"
