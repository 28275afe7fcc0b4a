// Copyright 2026 The lindest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lindest/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lindest/core.hpp"
#include "lindest/scenarios.hpp"

namespace lindest {

using nlohmann::json;

namespace {

void expect_keys(const json& obj, const std::set<std::string>& allowed,
                 const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ScenarioError("unknown field \"" + key + "\" in " + where);
  }
}

double get_number(const json& obj, const std::string& key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) throw ScenarioError("field \"" + key + "\" must be a number");
  return obj[key].get<double>();
}

Complex get_complex(const json& v, const std::string& where) {
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw ScenarioError(where + ": complex values are numbers or [re, im] pairs");
}

CMatrix parse_matrix(const json& rows, const std::string& where) {
  if (!rows.is_array() || rows.empty())
    throw ScenarioError(where + ": matrix must be an array of rows");
  const Eigen::Index d = static_cast<Eigen::Index>(rows.size());
  CMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != d)
      throw ScenarioError(where + ": matrix must be square");
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = get_complex(row[j], where);
  }
  return m;
}

// named operator presets; colon arguments like "pauli:XZ" or "quadrature:x"
CMatrix preset_operator(const std::string& name, const json& op, Eigen::Index dim,
                        const std::string& where) {
  std::string base = name, arg;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    arg = name.substr(pos + 1);
  }
  auto need_qubit = [&] {
    if (dim != 2) throw ScenarioError(where + ": " + base + " needs dim = 2");
  };
  auto collective_n = [&] {
    const int n = static_cast<int>(get_number(op, "n", static_cast<double>(dim - 1)));
    if (n + 1 != dim) throw ScenarioError(where + ": collective preset needs dim = n + 1");
    return n;
  };

  if (base == "sigma_x") { need_qubit(); return pauli_x(); }
  if (base == "sigma_y") { need_qubit(); return pauli_y(); }
  if (base == "sigma_z") { need_qubit(); return pauli_z(); }
  if (base == "sigma_plus") { need_qubit(); return sigma_plus(); }
  if (base == "sigma_minus") { need_qubit(); return sigma_minus(); }
  if (base == "ladder") {
    need_qubit();
    if (!op.contains("a") || !op.contains("b"))
      throw ScenarioError(where + ": ladder needs fields a and b");
    return get_complex(op["a"], where) * sigma_plus() +
           get_complex(op["b"], where) * sigma_minus();
  }
  if (base == "xy_plane") {
    need_qubit();
    const double theta = get_number(op, "theta", 0.0);
    return (std::cos(theta) * pauli_x() + std::sin(theta) * pauli_y()) / std::sqrt(2.0);
  }
  if (base == "pauli") {
    if (arg.empty()) throw ScenarioError(where + ": pauli preset needs a string, e.g. pauli:XZ");
    CMatrix m = pauli_string(arg);
    if (m.rows() != dim) throw ScenarioError(where + ": pauli string dimension mismatch");
    return m;
  }
  if (base == "J_minus") return collective_lowering(collective_n());
  if (base == "J_plus") return collective_raising(collective_n());
  if (base == "J_z") return collective_jz(collective_n());
  if (base == "J_x") return collective_jx(collective_n());
  if (base == "J_y") return collective_jy(collective_n());
  if (base == "annihilation") return make_bosonic(dim).a;
  if (base == "creation") return make_bosonic(dim).adag;
  if (base == "number") return make_bosonic(dim).n;
  if (base == "quadrature") {
    if (arg == "x") return make_bosonic(dim).x;
    if (arg == "p") return make_bosonic(dim).p;
    throw ScenarioError(where + ": quadrature axis must be x or p");
  }
  throw ScenarioError(where + ": unknown operator preset \"" + name + "\"");
}

PureState preset_state(const json& st, Eigen::Index dim) {
  const std::string name = st.at("name").get<std::string>();
  auto need_qubit = [&] {
    if (dim != 2) throw ScenarioError("state preset " + name + " needs dim = 2");
  };
  if (name == "up") { need_qubit(); return basis_state(2, 0); }
  if (name == "down") { need_qubit(); return basis_state(2, 1); }
  if (name == "plus" || name == "minus") {
    need_qubit();
    CVector v(2);
    v << 1.0, name == "plus" ? 1.0 : -1.0;
    return make_pure(std::move(v), 2);
  }
  if (name == "equator") {
    need_qubit();
    const double phi = get_number(st, "phi", 0.0);
    CVector v(2);
    v << 1.0, std::exp(kImag * phi);
    return make_pure(std::move(v), 2);
  }
  if (name == "bell") return bell_state(dim);
  if (name == "ghz") {
    CVector v = CVector::Zero(dim);
    v(0) = 1.0;
    v(dim - 1) = 1.0;
    return make_pure(std::move(v), dim);
  }
  if (name == "uniform") return make_pure(CVector::Ones(dim), dim);
  if (name == "fock") {
    const int n = static_cast<int>(get_number(st, "n", 0.0));
    if (n < 0 || n >= dim) throw ScenarioError("fock level outside dimension");
    return basis_state(dim, n);
  }
  if (name == "smsv") {
    BosonicStateSpec spec;
    spec.kind = BosonicStateKind::smsv;
    spec.nbar = get_number(st, "nbar", 1.0);
    return std::get<PureState>(bosonic_states(spec, dim));
  }
  if (name == "binomial") {
    BosonicStateSpec spec;
    spec.kind = BosonicStateKind::binomial;
    spec.nbar = get_number(st, "nbar", 1.0);
    spec.nstar = static_cast<int>(get_number(st, "nstar", 3.0));
    return std::get<PureState>(bosonic_states(spec, dim));
  }
  throw ScenarioError("unknown state preset \"" + name + "\"");
}

}  // namespace

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) throw ScenarioError("scenario must be a JSON object");
  expect_keys(j,
              {"schema_version", "dim", "total_time", "step_time", "signal_rate",
               "operators", "state", "classical"},
              "scenario");
  if (!j.contains("schema_version") || j["schema_version"] != "1")
    throw ScenarioError("scenario needs schema_version \"1\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw ScenarioError("scenario needs an integer dim");

  Scenario sc;
  sc.raw = j;
  sc.model.dim = j["dim"].get<Eigen::Index>();
  sc.model.total_time = get_number(j, "total_time", 1.0);
  sc.model.step_time = get_number(j, "step_time", 1e-3);
  sc.model.signal_rate = get_number(j, "signal_rate", 0.0);

  if (!j.contains("operators") || !j["operators"].is_array() || j["operators"].empty())
    throw ScenarioError("scenario needs a non-empty operators array");
  int op_index = 0;
  for (const auto& op : j["operators"]) {
    std::ostringstream where;
    where << "operators[" << op_index++ << "]";
    if (!op.is_object()) throw ScenarioError(where.str() + " must be an object");
    expect_keys(op, {"role", "name", "matrix", "scale", "rate", "n", "theta", "a", "b"},
                where.str());
    const std::string role = op.at("role").get<std::string>();
    if (role != "signal" && role != "noise")
      throw ScenarioError(where.str() + ": role must be signal or noise");
    if (op.contains("name") == op.contains("matrix"))
      throw ScenarioError(where.str() + ": give exactly one of name or matrix");

    CMatrix m;
    if (op.contains("matrix")) {
      m = parse_matrix(op["matrix"], where.str());
      if (m.rows() != sc.model.dim)
        throw ScenarioError(where.str() + ": matrix dimension mismatch");
    } else {
      m = preset_operator(op["name"].get<std::string>(), op, sc.model.dim, where.str());
    }
    m *= get_number(op, "scale", 1.0);
    if (role == "signal") {
      sc.model.signals.push_back(std::move(m));
    } else {
      sc.model.noises.push_back(std::move(m));
      sc.model.noise_rates.push_back(get_number(op, "rate", 1.0));
    }
  }
  sc.model.validate();

  if (j.contains("state")) {
    const auto& st = j["state"];
    if (!st.is_object()) throw ScenarioError("state must be an object");
    expect_keys(st, {"name", "phi", "n", "nbar", "nstar", "amplitudes", "system_dim", "density"},
                "state");
    if (st.contains("amplitudes")) {
      const auto& amp = st["amplitudes"];
      if (!amp.is_array() || amp.empty()) throw ScenarioError("state amplitudes must be an array");
      CVector v(static_cast<Eigen::Index>(amp.size()));
      for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = get_complex(amp[i], "state.amplitudes");
      const Eigen::Index sys = st.contains("system_dim")
                                   ? st["system_dim"].get<Eigen::Index>()
                                   : sc.model.dim;
      if (sys != sc.model.dim) throw ScenarioError("state system_dim must equal scenario dim");
      if (v.size() % sys != 0) throw ScenarioError("state length must be a multiple of dim");
      sc.pure = make_pure(std::move(v), sys);
      sc.state_kind = Scenario::StateKind::pure;
    } else if (st.contains("density")) {
      sc.mixed.rho = parse_matrix(st["density"], "state.density");
      if (sc.mixed.dim() != sc.model.dim)
        throw ScenarioError("state density dimension mismatch");
      sc.mixed.validate(1e-9);
      sc.state_kind = Scenario::StateKind::mixed;
    } else if (st.contains("name") && st["name"] == "optimize") {
      sc.state_kind = Scenario::StateKind::optimize;
    } else {
      sc.pure = preset_state(st, sc.model.dim);
      sc.state_kind = Scenario::StateKind::pure;
    }
  }

  if (j.contains("classical")) {
    const auto& cl = j["classical"];
    expect_keys(cl, {"vectors"}, "classical");
    const auto& vecs = cl.at("vectors");
    if (!vecs.is_array() || vecs.empty())
      throw ScenarioError("classical.vectors must be a non-empty array");
    ClassicalInstance inst;
    inst.dim = sc.model.dim;
    inst.l.resize(static_cast<Eigen::Index>(vecs.size()), inst.dim);
    for (Eigen::Index r = 0; r < inst.l.rows(); ++r) {
      const auto& row = vecs[r];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != inst.dim)
        throw ScenarioError("classical vectors must have length dim");
      for (Eigen::Index c = 0; c < inst.dim; ++c) inst.l(r, c) = row[c].get<double>();
    }
    try {
      inst.validate();
    } catch (const std::invalid_argument& err) {
      throw ScenarioError(std::string("classical block: ") + err.what());
    }
    sc.classical = std::move(inst);
  }
  return sc;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw ScenarioError(std::string("scenario JSON parse error: ") + err.what());
  }
  return parse_scenario(j);
}

std::string scenario_hash(const json& j) {
  const std::string canon = j.dump();
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canon) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

json to_json(const ResultRecord& record) {
  json j;
  j["command"] = record.command;
  j["scenario_hash"] = record.scenario_hash;
  j["values"] = record.values;
  j["state"] = record.state;
  j["certificate"] = record.certificate;
  j["seed"] = record.seed;
  j["tool_version"] = record.tool_version;
  return j;
}

ResultRecord record_from_json(const json& j) {
  ResultRecord r;
  r.command = j.at("command").get<std::string>();
  r.scenario_hash = j.at("scenario_hash").get<std::string>();
  r.values = j.at("values");
  r.state = j.at("state");
  r.certificate = j.at("certificate");
  r.seed = j.at("seed").get<std::uint64_t>();
  r.tool_version = j.at("tool_version").get<std::string>();
  return r;
}

json state_to_json(const MixedState& rho) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < rho.dim(); ++k)
      row.push_back(json::array({rho.rho(i, k).real(), rho.rho(i, k).imag()}));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lindest
