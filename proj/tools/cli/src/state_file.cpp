// Copyright 2026 The qcorr Authors
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

#include "qcorr/cli/state_file.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string_view>
#include <vector>

#include "qcorr/error.hpp"

namespace qcorr::cli {

namespace {

class LineReader {
  public:
    LineReader(std::istream &in, std::string source) : in_(in), source_(std::move(source)) {}

    // Next line that is neither blank nor a comment; false at end of input.
    bool next(std::string &line) {
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(std::size_t column, const std::string &what) const {
        throw Error(ErrorKind::ParseError,
                    source_ + ":" + std::to_string(number_) + ":" + std::to_string(column + 1) + ": " + what);
    }

    [[noreturn]] void fail_eof(const std::string &what) const {
        throw Error(ErrorKind::ParseError, source_ + ": unexpected end of input: " + what);
    }

  private:
    std::istream &in_;
    std::string source_;
    int number_ = 0;
};

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> split_whitespace(std::string_view line, std::size_t offset = 0) {
    std::vector<Token> out;
    std::size_t i = offset;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), start});
    }
    return out;
}

bool parse_number(std::string_view text, double &value) {
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    return ec == std::errc() && ptr == end;
}

} // namespace

DensityOperator parse_state(std::istream &in, const std::string &source) {
    LineReader reader(in, source);
    std::string line;

    if (!reader.next(line)) reader.fail_eof("missing 'qstate v1' header");
    if (line != "qstate v1") reader.fail(0, "expected 'qstate v1', found '" + line + "'");

    if (!reader.next(line)) reader.fail_eof("missing 'dims:' line");
    constexpr std::string_view dims_key = "dims:";
    if (line.rfind(dims_key, 0) != 0) reader.fail(0, "expected 'dims: d1 ... dn'");
    std::vector<int> dims;
    for (const auto &tok : split_whitespace(line, dims_key.size())) {
        int d = 0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), d);
        if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
            reader.fail(tok.column, "bad dimension '" + std::string(tok.text) + "'");
        }
        if (d < 2) reader.fail(tok.column, "local dimension must be >= 2, got " + std::to_string(d));
        dims.push_back(d);
    }
    if (dims.empty()) reader.fail(dims_key.size(), "no dimensions given");

    SystemShape shape(std::move(dims));
    const Eigen::Index d = shape.total_dim();
    ComplexMatrix m(d, d);
    for (Eigen::Index r = 0; r < d; ++r) {
        if (!reader.next(line)) reader.fail_eof("expected " + std::to_string(d) + " matrix rows, got " + std::to_string(r));
        const auto tokens = split_whitespace(line);
        if (static_cast<Eigen::Index>(tokens.size()) != d) {
            reader.fail(0, "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(d));
        }
        for (Eigen::Index c = 0; c < d; ++c) {
            const Token &tok = tokens[static_cast<std::size_t>(c)];
            const auto comma = tok.text.find(',');
            double re = 0.0, im = 0.0;
            if (comma == std::string_view::npos || !parse_number(tok.text.substr(0, comma), re) ||
                !parse_number(tok.text.substr(comma + 1), im)) {
                reader.fail(tok.column, "expected 're,im', found '" + std::string(tok.text) + "'");
            }
            m(r, c) = Complex(re, im);
        }
    }
    if (reader.next(line)) reader.fail(0, "unexpected content after the matrix");

    return DensityOperator::create(std::move(shape), std::move(m));
}

DensityOperator load_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
    return parse_state(in, path.string());
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
    if (ec != std::errc()) throw Error(ErrorKind::IoError, "cannot format number");
    return std::string(buf, ptr);
}

void write_state(std::ostream &out, const DensityOperator &rho) {
    out << "qstate v1\ndims:";
    for (int d : rho.shape().dims()) out << ' ' << d;
    out << '\n';
    const ComplexMatrix &m = rho.matrix();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << format_double(m(r, c).real()) << ',' << format_double(m(r, c).imag());
        }
        out << '\n';
    }
}

void save_state(const std::filesystem::path &path, const DensityOperator &rho) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
    write_state(out, rho);
    if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

void pretty_print(std::ostream &out, const DensityOperator &rho) {
    out << "shape " << rho.shape().to_string() << ", dimension " << rho.dim() << '\n';
    const ComplexMatrix &m = rho.matrix();
    char buf[64];
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            const double re = m(r, c).real();
            const double im = m(r, c).imag();
            std::snprintf(buf, sizeof buf, "%9.6f%+9.6fi", re == 0.0 ? 0.0 : re, im == 0.0 ? 0.0 : im);
            out << (c ? "  " : "") << buf;
        }
        out << '\n';
    }
}

} // namespace qcorr::cli
