// Copyright 2026 The qphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QPHASE_IO_H
#define QPHASE_IO_H

#include <filesystem>
#include <iosfwd>
#include <string>

#include "qphase/states.h"
#include "qphase/tomography.h"
#include "qphase/wigner.h"

namespace qphase {

/// Shortest text that reproduces `x` when capped at 12 significant digits.
std::string format_number(double x);
/// `x` rounded to what format_number prints.
double round_to_printed(double x);

// State files: JSON {"n_qubits": n, "matrix_re": [[...]], "matrix_im": [[...]]}.
std::string state_to_json(const DensityOperator &rho);
DensityOperator state_from_json(const std::string &text);
void write_state_file(const std::filesystem::path &path, const DensityOperator &rho);
DensityOperator read_state_file(const std::filesystem::path &path);

// Counts files: CSV with header "setting,outcome,count".
void write_counts_csv(std::ostream &out, const TomographyDataset &data);
/// Parses and checks row syntax. shots_per_setting is taken from the first
/// setting's total; completeness is left to validate_complete.
TomographyDataset read_counts_csv(std::istream &in);
void write_counts_file(const std::filesystem::path &path, const TomographyDataset &data);
TomographyDataset read_counts_file(const std::filesystem::path &path);

// Slice files: CSV with header "theta,phi,w", row-major over the theta x phi grid.
void write_slice_csv(std::ostream &out, const Slice &slice);
Slice read_slice_csv(std::istream &in);
void write_slice_file(const std::filesystem::path &path, const Slice &slice);
Slice read_slice_file(const std::filesystem::path &path);

}  // namespace qphase

#endif
