#pragma once

#include "word.hpp"
#include "weyl.hpp"
#include "ssdt.hpp"
#include "crystal_graph.hpp"
#include "insertion.hpp"
#include "decompose.hpp"
#include "format.hpp"
