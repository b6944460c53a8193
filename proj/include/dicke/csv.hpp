// Copyright 2026 The dickesim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dicke/measurement.hpp"

namespace dicke::csv {

/// Shortest form that round-trips at 17 significant digits.
std::string format_double(double v);

void write_probabilities(std::ostream& os, const ProbTable& table);   // j,m,p
void write_counts(std::ostream& os, const ShotCounts& counts);        // j,m,count
void write_husimi(std::ostream& os, const std::vector<HusimiPoint>& grid);  // theta,phi,q

/// Writes a header and rows of doubles.
void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows);

/// Parses a `j,m,p` file back into a table.
ProbTable read_probabilities(std::istream& is);

}  // namespace dicke::csv
