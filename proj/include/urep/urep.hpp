#pragma once

#include "urep/atlas.hpp"
#include "urep/canonical.hpp"
#include "urep/classes.hpp"
#include "urep/construct.hpp"
#include "urep/error.hpp"
#include "urep/generators.hpp"
#include "urep/graph.hpp"
#include "urep/graph_io.hpp"
#include "urep/obstruction.hpp"
#include "urep/recognize.hpp"
#include "urep/represent.hpp"
#include "urep/serialize.hpp"
#include "urep/words.hpp"
