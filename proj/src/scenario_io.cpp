// SPDX-License-Identifier: Apache-2.0
//
// mumor: channel modelling and sum-rate bounds for networks of reflecting surfaces
// Copyright (C) 2026 The mumor authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "mumor/scenario_io.hpp"
#include "mumor/beamforming.hpp"
#include "scenario_yaml.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace mumor
{
    ConfigError::ConfigError(const std::string &field, const std::string &problem)
        : Error(field + ": " + problem), field_(field)
    {
    }

    std::string read_text_file(const std::string &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError(path, "cannot open file for reading");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    namespace yaml
    {
        Field Field::at(const std::string &key) const
        {
            return {node[key], path.empty() ? key : path + "." + key};
        }

        Field Field::at(std::size_t index) const
        {
            return {node[index], path + "[" + std::to_string(index) + "]"};
        }

        bool Field::has(const std::string &key) const
        {
            return node.IsMap() && node[key].IsDefined() && !node[key].IsNull();
        }

        void Field::require_map() const
        {
            if (!node.IsMap())
                throw ConfigError(path.empty() ? "<root>" : path, "expected a table");
        }

        std::size_t Field::require_sequence() const
        {
            if (!node.IsSequence())
                throw ConfigError(path, "expected a list");
            return node.size();
        }

        void Field::reject_unknown(std::initializer_list<const char *> known) const
        {
            require_map();
            for (const auto &kv : node)
            {
                const auto key = kv.first.as<std::string>();
                bool ok = false;
                for (const char *k : known)
                    ok = ok || key == k;
                if (!ok)
                    throw ConfigError(path.empty() ? key : path + "." + key, "unknown key");
            }
        }

        double Field::real() const
        {
            if (!node.IsDefined() || node.IsNull())
                throw ConfigError(path, "missing value");
            double value;
            if (!node.IsScalar() || !YAML::convert<double>::decode(node, value) || !std::isfinite(value))
                throw ConfigError(path, "expected a finite number");
            return value;
        }

        double Field::real_or(double fallback) const
        {
            return (node.IsDefined() && !node.IsNull()) ? real() : fallback;
        }

        long long Field::integer() const
        {
            if (!node.IsDefined() || node.IsNull())
                throw ConfigError(path, "missing value");
            long long value;
            if (!node.IsScalar() || !YAML::convert<long long>::decode(node, value))
                throw ConfigError(path, "expected an integer");
            return value;
        }

        long long Field::integer_or(long long fallback) const
        {
            return (node.IsDefined() && !node.IsNull()) ? integer() : fallback;
        }

        bool Field::boolean_or(bool fallback) const
        {
            if (!node.IsDefined() || node.IsNull())
                return fallback;
            bool value;
            if (!node.IsScalar() || !YAML::convert<bool>::decode(node, value))
                throw ConfigError(path, "expected true or false");
            return value;
        }

        std::string Field::text() const
        {
            if (!node.IsDefined() || node.IsNull() || !node.IsScalar())
                throw ConfigError(path, "expected a string");
            return node.as<std::string>();
        }

        Angle Field::angle_deg() const
        {
            const double deg = real();
            try
            {
                return Angle::degrees(deg);
            }
            catch (const std::invalid_argument &)
            {
                throw ConfigError(path, "angle must lie in [0, 180] degrees");
            }
        }

        std::vector<double> Field::reals() const
        {
            const std::size_t n = require_sequence();
            std::vector<double> out;
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(at(i).real());
            return out;
        }

        std::vector<long long> Field::integers() const
        {
            const std::size_t n = require_sequence();
            std::vector<long long> out;
            for (std::size_t i = 0; i < n; ++i)
                out.push_back(at(i).integer());
            return out;
        }

        Field parse_document(const std::string &text)
        {
            try
            {
                YAML::Node root = YAML::Load(text);
                if (!root.IsDefined() || root.IsNull())
                    root = YAML::Node(YAML::NodeType::Map);
                Field f{root, ""};
                f.require_map();
                return f;
            }
            catch (const YAML::ParserException &e)
            {
                std::ostringstream where;
                where << "line " << e.mark.line + 1 << ", column " << e.mark.column + 1;
                throw ConfigError(where.str(), e.msg);
            }
        }
    } // namespace yaml

    namespace
    {
        using yaml::Field;

        // Linear watts from either `<key>_w` or `<key>_dbm`
        double power_field(const Field &parent, const std::string &key, double fallback)
        {
            const bool linear = parent.has(key + "_w");
            const bool dbm = parent.has(key + "_dbm");
            if (linear && dbm)
                throw ConfigError(parent.at(key + "_dbm").path, "give either " + key + "_w or " + key + "_dbm");
            if (dbm)
                return db_to_power(parent.at(key + "_dbm").real() - 30.0);
            if (!linear)
                return fallback;
            const Field f = parent.at(key + "_w");
            const double value = f.real();
            if (value < 0.0)
                throw ConfigError(f.path, "power must be non-negative");
            return value;
        }

        int surface_index(const Field &f, int K)
        {
            const long long k = f.integer();
            if (k < 0 || k >= K)
                throw ConfigError(f.path, "surface index must lie in [0, " + std::to_string(K - 1) + "]");
            return static_cast<int>(k);
        }

        UlaSurface parse_surface(const Field &f)
        {
            f.reject_unknown({"elements", "spacing_wavelengths", "path_loss", "path_loss_db", "wavelength_m", "pose",
                              "weights"});
            const long long M = f.at("elements").integer();
            if (M < 1 || M > 1'000'000)
                throw ConfigError(f.at("elements").path, "expected a positive element count");
            const double spacing = f.at("spacing_wavelengths").real_or(0.5);
            if (!(spacing > 0.0))
                throw ConfigError(f.at("spacing_wavelengths").path, "must be positive");
            double loss = f.at("path_loss").real_or(1.0);
            if (f.has("path_loss_db"))
            {
                if (f.has("path_loss"))
                    throw ConfigError(f.at("path_loss_db").path, "give either path_loss or path_loss_db");
                loss = db_to_amplitude(f.at("path_loss_db").real());
            }
            if (loss < 0.0)
                throw ConfigError(f.at("path_loss").path, "must be non-negative");
            const double wavelength = f.at("wavelength_m").real_or(1.0);
            if (!(wavelength > 0.0))
                throw ConfigError(f.at("wavelength_m").path, "must be positive");

            Pose pose;
            if (f.has("pose"))
            {
                const Field p = f.at("pose");
                p.reject_unknown({"x_m", "y_m", "orientation_deg"});
                pose.x_m = p.at("x_m").real_or(0.0);
                pose.y_m = p.at("y_m").real_or(0.0);
                pose.orientation_rad = deg_to_rad(p.at("orientation_deg").real_or(0.0));
            }
            return UlaSurface(static_cast<int>(M), spacing, loss, wavelength, pose);
        }

        WeightVector parse_weights(const Field &surface_field, const UlaSurface &surface)
        {
            if (!surface_field.has("weights"))
                return WeightVector::ones(surface.element_count());
            const Field f = surface_field.at("weights");
            if (f.node.IsScalar())
            {
                if (f.text() != "ones")
                    throw ConfigError(f.path, "expected 'ones' or a table with mrc, random or phases_deg");
                return WeightVector::ones(surface.element_count());
            }
            f.reject_unknown({"mrc", "random", "phases_deg"});
            if (f.node.size() != 1)
                throw ConfigError(f.path, "give exactly one of mrc, random, phases_deg");
            if (f.has("mrc"))
            {
                const Field m = f.at("mrc");
                m.reject_unknown({"aoa_deg", "aod_deg", "offset"});
                std::optional<int> offset;
                if (m.has("offset"))
                    offset = static_cast<int>(m.at("offset").integer());
                return mrc_weights({m.at("aoa_deg").angle_deg(), m.at("aod_deg").angle_deg()}, surface, offset).weights;
            }
            if (f.has("random"))
            {
                const Field r = f.at("random");
                r.reject_unknown({"seed"});
                const long long seed = r.at("seed").integer();
                return random_weights(surface.element_count(), static_cast<std::uint64_t>(seed));
            }
            const Field p = f.at("phases_deg");
            const auto phases = p.reals();
            if (static_cast<int>(phases.size()) != surface.element_count())
                throw ConfigError(p.path, "expected " + std::to_string(surface.element_count()) + " phases");
            Eigen::VectorXd rad(phases.size());
            for (std::size_t m = 0; m < phases.size(); ++m)
                rad(static_cast<Eigen::Index>(m)) = deg_to_rad(phases[m]);
            return WeightVector::from_phases(rad);
        }

        std::vector<Attachment> parse_attachments(const Field &t, const char *single, const char *many,
                                                  const char *angle_key, int K)
        {
            std::vector<Field> items;
            if (t.has(single) == t.has(many))
                throw ConfigError(t.path, std::string("give exactly one of ") + single + " or " + many);
            if (t.has(single))
                items.push_back(t.at(single));
            else
            {
                const Field list = t.at(many);
                const std::size_t n = list.require_sequence();
                if (n == 0)
                    throw ConfigError(list.path, "expected at least one attachment");
                for (std::size_t i = 0; i < n; ++i)
                    items.push_back(list.at(i));
            }
            std::vector<Attachment> out;
            for (const auto &a : items)
            {
                a.reject_unknown({"surface", angle_key});
                out.push_back({surface_index(a.at("surface"), K), a.at(angle_key).angle_deg()});
            }
            return out;
        }
    } // namespace

    NetworkScenario parse_scenario(const std::string &yaml_text)
    {
        const Field root = yaml::parse_document(yaml_text);
        root.reject_unknown({"max_order", "allow_revisit", "inter_irs_model", "transmit_power_w", "transmit_power_dbm",
                             "noise_power_w", "noise_power_dbm", "surfaces", "links", "transceivers"});

        NetworkScenario s;
        const long long order = root.at("max_order").integer_or(1);
        if (order < 1 || order > 64)
            throw ConfigError("max_order", "expected an integer in [1, 64]");
        s.max_order = static_cast<int>(order);
        s.allow_revisit = root.at("allow_revisit").boolean_or(true);
        const std::string model = root.has("inter_irs_model") ? root.at("inter_irs_model").text() : "farfield";
        if (model == "farfield")
            s.inter_irs_model = InterIrsModel::farfield;
        else if (model == "exact")
            s.inter_irs_model = InterIrsModel::exact;
        else
            throw ConfigError("inter_irs_model", "expected 'farfield' or 'exact'");
        s.transmit_power_w = power_field(root, "transmit_power", 1.0);
        s.noise_power_w = power_field(root, "noise_power", 1.0);
        if (!(s.noise_power_w > 0.0))
            throw ConfigError("noise_power_w", "must be positive");

        const Field surfaces = root.at("surfaces");
        const std::size_t K = surfaces.require_sequence();
        if (K == 0)
            throw ConfigError(surfaces.path, "expected at least one surface");
        for (std::size_t k = 0; k < K; ++k)
        {
            const Field f = surfaces.at(k);
            try
            {
                s.surfaces.push_back(parse_surface(f));
                s.weights.push_back(parse_weights(f, s.surfaces.back()));
            }
            catch (const ConfigError &)
            {
                throw;
            }
            catch (const std::exception &e)
            {
                throw ConfigError(f.path, e.what());
            }
        }

        if (root.has("links"))
        {
            const Field links = root.at("links");
            const std::size_t n = links.require_sequence();
            for (std::size_t i = 0; i < n; ++i)
            {
                const Field l = links.at(i);
                l.reject_unknown({"from", "to", "departure_deg", "arrival_deg", "distance_m", "edge_loss_db",
                                  "from_poses"});
                const int from = surface_index(l.at("from"), static_cast<int>(K));
                const int to = surface_index(l.at("to"), static_cast<int>(K));
                if (from == to)
                    throw ConfigError(l.at("to").path, "a link must join two different surfaces");
                if (s.links.count({from, to}))
                    throw ConfigError(l.path, "duplicate link between surfaces " + std::to_string(from) + " and " +
                                                  std::to_string(to));
                // Loss in dB, so 10 means the amplitude drops by sqrt(10) per traversal
                const double amplitude = db_to_amplitude(-l.at("edge_loss_db").real_or(0.0));

                InterIrsLink link{Angle::degrees(90.0), Angle::degrees(90.0), 1.0, amplitude};
                if (l.at("from_poses").boolean_or(false))
                {
                    for (const char *key : {"departure_deg", "arrival_deg", "distance_m"})
                        if (l.has(key))
                            throw ConfigError(l.at(key).path, "not allowed together with from_poses");
                    try
                    {
                        link = link_from_poses(s.surfaces[from], s.surfaces[to], amplitude);
                    }
                    catch (const Error &e)
                    {
                        throw ConfigError(l.path, e.what());
                    }
                }
                else
                {
                    link.departure = l.at("departure_deg").angle_deg();
                    link.arrival = l.at("arrival_deg").angle_deg();
                    link.distance_m = l.at("distance_m").real();
                    if (!(link.distance_m > 0.0))
                        throw ConfigError(l.at("distance_m").path, "must be positive");
                }
                s.add_link(from, to, link);
            }
        }

        const Field transceivers = root.at("transceivers");
        const std::size_t N = transceivers.require_sequence();
        if (N == 0)
            throw ConfigError(transceivers.path, "expected at least one transceiver");
        for (std::size_t n = 0; n < N; ++n)
        {
            const Field t = transceivers.at(n);
            t.reject_unknown({"entry", "entries", "exit", "exits", "power_w", "power_dbm"});
            NetworkTransceiver tr;
            tr.entries = parse_attachments(t, "entry", "entries", "aoa_deg", static_cast<int>(K));
            tr.exits = parse_attachments(t, "exit", "exits", "aod_deg", static_cast<int>(K));
            tr.power_w = power_field(t, "power", s.transmit_power_w);
            s.transceivers.push_back(std::move(tr));
        }

        try
        {
            s.validate();
        }
        catch (const ModelError &e)
        {
            throw ConfigError("<scenario>", e.what());
        }
        return s;
    }

    NetworkScenario load_scenario(const std::string &path)
    {
        const std::string text = read_text_file(path);
        try
        {
            return parse_scenario(text);
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(path + ": " + e.field(), std::string(e.what()).substr(e.field().size() + 2));
        }
    }
} // namespace mumor
