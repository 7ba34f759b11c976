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

#include <charconv>
#include <filesystem>

#include "qcorr/cli/commands.hpp"
#include "qcorr/cli/state_file.hpp"

namespace qcorr::cli {

namespace {

constexpr std::string_view kWghzPrefix = "wghz:p=";

DensityOperator product_bell() {
    // I/2 on party 1, (|00> + |11>)/sqrt(2) on parties 2 and 3.
    return tensor({maximally_mixed(2), ghz(2)});
}

} // namespace

std::vector<std::string> builtin_names() {
    return {"ghz2", "ghz3", "ghz4", "ghz5", "ghz6", "w3", "chi-uniform-2", "product-bell", "wghz:p=<value>"};
}

std::optional<DensityOperator> builtin_state(const std::string &name) {
    if (name.size() == 4 && name.rfind("ghz", 0) == 0 && name[3] >= '2' && name[3] <= '6') {
        return ghz(name[3] - '0');
    }
    if (name == "w3") return w3();
    if (name == "chi-uniform-2") {
        const double p[] = {0.5, 0.5};
        return classical_chi(p, SystemShape{2, 2, 2});
    }
    if (name == "product-bell") return product_bell();
    if (name.rfind(kWghzPrefix, 0) == 0) {
        const std::string_view text = std::string_view(name).substr(kWghzPrefix.size());
        double p = 0.0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
        if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
            throw Error(ErrorKind::BadParameter, "cannot parse mixture weight in '" + name + "'");
        }
        return wghz_mixture(p);
    }
    return std::nullopt;
}

DensityOperator resolve_state(const std::string &spec) {
    if (auto builtin = builtin_state(spec)) return *std::move(builtin);
    if (!std::filesystem::exists(spec)) {
        throw Error(ErrorKind::IoError, "'" + spec + "' is neither a builtin state nor an existing file");
    }
    return load_state(spec);
}

} // namespace qcorr::cli
