// SPDX-License-Identifier: Apache-2.0

#include "sqir/matrix_json.hpp"

namespace sqir {

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::ordered_json data = nlohmann::ordered_json::array();
    for (const Complex& e : m.entries()) {
        data.push_back({e.real(), e.imag()});
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

nlohmann::ordered_json branch_to_json(const OutcomeBranch& branch) {
    nlohmann::ordered_json record = nlohmann::ordered_json::array();
    for (const auto& [q, bit] : branch.record) {
        record.push_back({q, bit});
    }
    return {{"record", std::move(record)},
            {"weight", branch.weight},
            {"state", matrix_to_json(branch.state)}};
}

} // namespace sqir
