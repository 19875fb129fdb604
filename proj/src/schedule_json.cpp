// Copyright 2026 The heac Authors
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

#include "heac/schedule_json.hpp"

#include <json.hpp>
#include <stdexcept>

namespace heac {

namespace {

using ojson = nlohmann::ordered_json;

ojson angle_json(const Angle &a) { return ojson::array({a.num(), a.den()}); }

Angle angle_from(const ojson &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw std::invalid_argument("angle must be [num, den]: " + j.dump());
    }
    return Angle(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

}  // namespace

std::string schedule_to_json(const HeaSchedule &s, int indent) {
    ojson layers = ojson::array();
    for (const RotationLayer &layer : s.layers()) {
        ojson row = ojson::array();
        for (const WireAngles &w : layer) {
            if (s.kind() == HeaKind::RyRzCz) {
                row.push_back(ojson::array({angle_json(w.y), angle_json(w.z)}));
            } else {
                row.push_back(angle_json(w.y));
            }
        }
        layers.push_back(std::move(row));
    }
    ojson doc;
    doc["kind"] = kind_name(s.kind());
    doc["qubits"] = s.num_qubits();
    doc["depth"] = s.depth();
    doc["layers"] = std::move(layers);
    return doc.dump(indent);
}

HeaSchedule schedule_from_json(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
        const HeaKind kind = parse_kind(doc.at("kind").get<std::string>());
        const int n = doc.at("qubits").get<int>();
        const int depth = doc.at("depth").get<int>();
        std::vector<RotationLayer> layers;
        for (const ojson &row : doc.at("layers")) {
            RotationLayer layer;
            for (const ojson &w : row) {
                if (kind == HeaKind::RyRzCz) {
                    if (!w.is_array() || w.size() != 2) throw std::invalid_argument("wire must be [[y],[z]]");
                    layer.push_back({angle_from(w[0]), angle_from(w[1])});
                } else {
                    layer.push_back({angle_from(w), Angle()});
                }
            }
            layers.push_back(std::move(layer));
        }
        HeaSchedule s(kind, n, std::move(layers));
        if (s.depth() != depth) {
            throw std::invalid_argument("declared depth " + std::to_string(depth) + " but " +
                                        std::to_string(s.layers().size()) + " layers");
        }
        return s;
    } catch (const nlohmann::json::exception &e) {
        throw std::invalid_argument(std::string("malformed schedule JSON: ") + e.what());
    }
}

std::string report_to_json(const DepthReport &r, int indent) {
    ojson doc;
    doc["compiled_depth"] = r.compiled_depth;
    doc["closed_form_bound"] = r.closed_form_bound;
    doc["within_bound"] = r.within_bound();
    doc["ancilla_count"] = r.ancilla_count;
    ojson counts = ojson::object();
    for (const auto &[k, v] : r.input_gate_counts) counts[k] = v;
    doc["input_gate_counts"] = std::move(counts);
    return doc.dump(indent);
}

}  // namespace heac
