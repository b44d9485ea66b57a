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

#include "qphase/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qphase {

std::string format_number(double x) {
    if (x == 0) {
        return "0";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

double round_to_printed(double x) {
    return std::stod(format_number(x));
}

namespace {

std::string read_all(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::ofstream open_for_write(const std::filesystem::path &path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    return out;
}

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
    return line;
}

double parse_double(const std::string &text, size_t line_no) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": '" + text + "' is not a number");
    }
    return v;
}

}  // namespace

std::string state_to_json(const DensityOperator &rho) {
    nlohmann::ordered_json doc;
    doc["n_qubits"] = rho.n_qubits();
    auto re = nlohmann::ordered_json::array();
    auto im = nlohmann::ordered_json::array();
    for (size_t r = 0; r < rho.dim(); r++) {
        auto re_row = nlohmann::ordered_json::array();
        auto im_row = nlohmann::ordered_json::array();
        for (size_t c = 0; c < rho.dim(); c++) {
            re_row.push_back(round_to_printed(rho(r, c).real()));
            im_row.push_back(round_to_printed(rho(r, c).imag()));
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    doc["matrix_re"] = std::move(re);
    doc["matrix_im"] = std::move(im);
    return doc.dump(2) + "\n";
}

DensityOperator state_from_json(const std::string &text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("state file: invalid JSON: ") + e.what());
    }
    try {
        size_t n = doc.at("n_qubits").get<size_t>();
        if (n == 0 || n > 10) {
            throw std::invalid_argument("state file: n_qubits must be in [1, 10]");
        }
        size_t d = size_t{1} << n;
        const auto &re = doc.at("matrix_re");
        const auto &im = doc.at("matrix_im");
        if (!re.is_array() || !im.is_array() || re.size() != d || im.size() != d) {
            throw std::invalid_argument("state file: matrix_re/matrix_im must have 2^n rows");
        }
        ComplexMatrix m(d, d);
        for (size_t r = 0; r < d; r++) {
            if (!re[r].is_array() || !im[r].is_array() || re[r].size() != d || im[r].size() != d) {
                throw std::invalid_argument("state file: row " + std::to_string(r) + " does not have 2^n entries");
            }
            for (size_t c = 0; c < d; c++) {
                m(r, c) = cdouble{re[r][c].get<double>(), im[r][c].get<double>()};
            }
        }
        return DensityOperator(std::move(m));
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("state file: ") + e.what());
    }
}

void write_state_file(const std::filesystem::path &path, const DensityOperator &rho) {
    auto out = open_for_write(path);
    out << state_to_json(rho);
}

DensityOperator read_state_file(const std::filesystem::path &path) {
    return state_from_json(read_all(path));
}

void write_counts_csv(std::ostream &out, const TomographyDataset &data) {
    out << "setting,outcome,count\n";
    for (const auto &rec : data.records) {
        out << rec.setting.bases() << "," << outcome_string(rec.outcome, data.n_qubits) << "," << rec.count << "\n";
    }
}

TomographyDataset read_counts_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "setting,outcome,count") {
        throw std::invalid_argument("counts file: expected header 'setting,outcome,count'");
    }
    TomographyDataset data;
    std::string first_setting;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv_line(line);
        auto where = "counts file line " + std::to_string(line_no) + ": ";
        if (fields.size() != 3) {
            throw std::invalid_argument(where + "expected 3 fields");
        }
        MeasurementSetting setting = [&] {
            try {
                return MeasurementSetting(fields[0]);
            } catch (const std::invalid_argument &e) {
                throw std::invalid_argument(where + e.what());
            }
        }();
        if (data.n_qubits == 0) {
            data.n_qubits = setting.n_qubits();
            first_setting = setting.bases();
        } else if (setting.n_qubits() != data.n_qubits) {
            throw std::invalid_argument(where + "setting length differs from earlier rows");
        }
        const auto &outcome_text = fields[1];
        if (outcome_text.size() != setting.n_qubits()) {
            throw std::invalid_argument(where + "outcome length does not match the setting");
        }
        size_t outcome = 0;
        for (char c : outcome_text) {
            if (c != '0' && c != '1') {
                throw std::invalid_argument(where + "outcome must be a bitstring");
            }
            outcome = (outcome << 1) | static_cast<size_t>(c - '0');
        }
        const auto &count_text = fields[2];
        if (count_text.empty() || count_text.find_first_not_of("0123456789") != std::string::npos ||
            count_text.size() > 18) {
            throw std::invalid_argument(where + "count must be a nonnegative integer");
        }
        uint64_t count = std::stoull(count_text);
        if (setting.bases() == first_setting) {
            data.shots_per_setting += count;
        }
        data.records.push_back({std::move(setting), outcome, count});
    }
    if (data.records.empty()) {
        throw std::invalid_argument("counts file: no rows");
    }
    return data;
}

void write_counts_file(const std::filesystem::path &path, const TomographyDataset &data) {
    auto out = open_for_write(path);
    write_counts_csv(out, data);
}

TomographyDataset read_counts_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    return read_counts_csv(in);
}

void write_slice_csv(std::ostream &out, const Slice &slice) {
    out << "theta,phi,w\n";
    for (size_t i = 0; i < slice.thetas.size(); i++) {
        for (size_t j = 0; j < slice.phis.size(); j++) {
            out << format_number(slice.thetas[i]) << "," << format_number(slice.phis[j]) << ","
                << format_number(slice.at(i, j)) << "\n";
        }
    }
}

Slice read_slice_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != "theta,phi,w") {
        throw std::invalid_argument("slice file: expected header 'theta,phi,w'");
    }
    Slice slice;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        line = strip_cr(line);
        if (line.empty()) {
            continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 3) {
            throw std::invalid_argument("slice file line " + std::to_string(line_no) + ": expected 3 fields");
        }
        double theta = parse_double(fields[0], line_no);
        double phi = parse_double(fields[1], line_no);
        double w = parse_double(fields[2], line_no);
        if (slice.thetas.empty() || slice.thetas.back() != theta) {
            slice.thetas.push_back(theta);
        }
        if (slice.thetas.size() == 1) {
            slice.phis.push_back(phi);
        }
        slice.values.push_back(w);
    }
    if (slice.values.empty() || slice.values.size() != slice.thetas.size() * slice.phis.size()) {
        throw std::invalid_argument("slice file: rows do not form a full theta x phi grid");
    }
    return slice;
}

void write_slice_file(const std::filesystem::path &path, const Slice &slice) {
    auto out = open_for_write(path);
    write_slice_csv(out, slice);
}

Slice read_slice_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    }
    return read_slice_csv(in);
}

}  // namespace qphase
