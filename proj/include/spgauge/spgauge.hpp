#pragma once

#include <spgauge/arith.hpp>
#include <spgauge/chdata.hpp>
#include <spgauge/error.hpp>
#include <spgauge/gauge.hpp>
#include <spgauge/lattice.hpp>
#include <spgauge/phi.hpp>
#include <spgauge/report.hpp>
#include <spgauge/series.hpp>
#include <spgauge/sweep.hpp>
