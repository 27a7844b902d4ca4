#pragma once

// Umbrella header for the whole library.

#include "spcert/bench.hpp"
#include "spcert/certificate.hpp"
#include "spcert/certify.hpp"
#include "spcert/errors.hpp"
#include "spcert/generate.hpp"
#include "spcert/graph.hpp"
#include "spcert/io.hpp"
#include "spcert/solve.hpp"
