#pragma once

#include "alphaseq/adjacency.hpp"
#include "alphaseq/elementary.hpp"
#include "alphaseq/enumeration.hpp"
#include "alphaseq/error.hpp"
#include "alphaseq/io.hpp"
#include "alphaseq/oracle.hpp"
#include "alphaseq/sequence.hpp"
