// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef HAMFORGE_CIRCUIT_HPP
#define HAMFORGE_CIRCUIT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "hamforge/errors.hpp"

namespace hamforge {

enum class GateKind {
  H, X, Z, S, Sdg, T, Tdg,          // fixed single-qubit
  Rx, Ry, Rz,                       // parameterized single-qubit (angle, radians)
  CNOT, CZ, Swap,                   // fixed two-qubit
  CZPow, Heis,                      // parameterized two-qubit (CZPow exponent, Heis angle)
  MeasZ, MeasX,                     // measurement into a classical bit
  XIfc, ZIfc, CZIfc                 // classically controlled X / Z / CZ
};

inline bool is_two_qubit(GateKind k) {
  switch (k) {
    case GateKind::CNOT: case GateKind::CZ: case GateKind::Swap:
    case GateKind::CZPow: case GateKind::Heis: case GateKind::CZIfc:
      return true;
    default:
      return false;
  }
}

inline bool has_param(GateKind k) {
  switch (k) {
    case GateKind::Rx: case GateKind::Ry: case GateKind::Rz:
    case GateKind::CZPow: case GateKind::Heis:
      return true;
    default:
      return false;
  }
}

inline bool is_measurement(GateKind k) {
  return k == GateKind::MeasZ || k == GateKind::MeasX;
}

inline bool is_classically_controlled(GateKind k) {
  return k == GateKind::XIfc || k == GateKind::ZIfc || k == GateKind::CZIfc;
}

inline const char* mnemonic(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
    case GateKind::Swap: return "swap";
    case GateKind::CZPow: return "czpow";
    case GateKind::Heis: return "heis";
    case GateKind::MeasZ: return "measz";
    case GateKind::MeasX: return "measx";
    case GateKind::XIfc: return "x_ifc";
    case GateKind::ZIfc: return "z_ifc";
    case GateKind::CZIfc: return "cz_ifc";
  }
  return "?";
}

struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;       // second qubit for two-qubit gates, else -1
  int clbit = -1;    // measurement destination or classical control, else -1
  double param = 0;  // rotation angle (radians) or CZPow exponent

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && clbit == o.clbit &&
           param == o.param;
  }

  // Convenience constructors.
  static Gate g1(GateKind k, int q) { return {k, q, -1, -1, 0}; }
  static Gate rot(GateKind k, double angle, int q) { return {k, q, -1, -1, angle}; }
  static Gate h(int q) { return g1(GateKind::H, q); }
  static Gate x(int q) { return g1(GateKind::X, q); }
  static Gate z(int q) { return g1(GateKind::Z, q); }
  static Gate s(int q) { return g1(GateKind::S, q); }
  static Gate sdg(int q) { return g1(GateKind::Sdg, q); }
  static Gate t(int q) { return g1(GateKind::T, q); }
  static Gate tdg(int q) { return g1(GateKind::Tdg, q); }
  static Gate rx(double a, int q) { return rot(GateKind::Rx, a, q); }
  static Gate ry(double a, int q) { return rot(GateKind::Ry, a, q); }
  static Gate rz(double a, int q) { return rot(GateKind::Rz, a, q); }
  static Gate cnot(int qc, int qt) { return {GateKind::CNOT, qc, qt, -1, 0}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, a, b, -1, 0}; }
  static Gate swap(int a, int b) { return {GateKind::Swap, a, b, -1, 0}; }
  static Gate czpow(double a, int x, int y) { return {GateKind::CZPow, x, y, -1, a}; }
  static Gate heis(double a, int x, int y) { return {GateKind::Heis, x, y, -1, a}; }
  static Gate measz(int q, int c) { return {GateKind::MeasZ, q, -1, c, 0}; }
  static Gate measx(int q, int c) { return {GateKind::MeasX, q, -1, c, 0}; }
  static Gate x_ifc(int c, int q) { return {GateKind::XIfc, q, -1, c, 0}; }
  static Gate z_ifc(int c, int q) { return {GateKind::ZIfc, q, -1, c, 0}; }
  static Gate cz_ifc(int c, int a, int b) { return {GateKind::CZIfc, a, b, c, 0}; }
};

struct Circuit {
  int num_qubits = 0;
  int num_clbits = 0;
  std::vector<Gate> ops;

  void add(const Gate& g) { ops.push_back(g); }

  bool operator==(const Circuit& o) const {
    return num_qubits == o.num_qubits && num_clbits == o.num_clbits && ops == o.ops;
  }

  // Checks the type invariants; throws validation_error on the first breach.
  void validate() const {
    if (num_qubits < 0 || num_clbits < 0)
      throw validation_error("negative qubit/clbit count");
    std::vector<bool> written(static_cast<std::size_t>(num_clbits), false);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const Gate& g = ops[i];
      auto at = [&](const std::string& m) {
        return validation_error("op " + std::to_string(i) + " (" + mnemonic(g.kind) + "): " + m);
      };
      if (g.q0 < 0 || g.q0 >= num_qubits) throw at("qubit index out of range");
      if (is_two_qubit(g.kind)) {
        if (g.q1 < 0 || g.q1 >= num_qubits) throw at("qubit index out of range");
        if (g.q0 == g.q1) throw at("two-qubit gate with equal qubit indices");
      } else if (g.q1 != -1) {
        throw at("unexpected second qubit");
      }
      if (has_param(g.kind) && !std::isfinite(g.param)) throw at("non-finite parameter");
      if (is_measurement(g.kind) || is_classically_controlled(g.kind)) {
        if (g.clbit < 0 || g.clbit >= num_clbits) throw at("clbit index out of range");
        if (is_measurement(g.kind)) {
          written[static_cast<std::size_t>(g.clbit)] = true;
        } else if (!written[static_cast<std::size_t>(g.clbit)]) {
          throw at("classically controlled gate reads a clbit never measured");
        }
      } else if (g.clbit != -1) {
        throw at("unexpected clbit");
      }
    }
  }
};

// Concatenates b after a (same qubit/clbit space sized to fit both).
inline Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit c;
  c.num_qubits = std::max(a.num_qubits, b.num_qubits);
  c.num_clbits = std::max(a.num_clbits, b.num_clbits);
  c.ops = a.ops;
  c.ops.insert(c.ops.end(), b.ops.begin(), b.ops.end());
  return c;
}

struct ResourceReport {
  long long cnot_count = 0;
  long long t_count = 0;                    // T + Tdg
  long long rz_count = 0;                   // Rz only; Rx/Ry are tracked separately
  long long rx_ry_count = 0;
  long long single_qubit_clifford_count = 0;  // H,X,Z,S,Sdg and classically controlled X/Z
  long long measurement_count = 0;
  long long ancilla_count = 0;              // distinct measured qubits
  long long two_qubit_depth = 0;
  long long heis_macro_count = 0;           // unexpanded Heis gates
  long long czpow_macro_count = 0;          // unexpanded CZPow gates
};

inline long long two_qubit_depth(const Circuit& c) {
  std::vector<long long> depth(static_cast<std::size_t>(c.num_qubits), 0);
  long long best = 0;
  for (const Gate& g : c.ops) {
    if (!is_two_qubit(g.kind)) continue;
    long long d = std::max(depth[static_cast<std::size_t>(g.q0)],
                           depth[static_cast<std::size_t>(g.q1)]) + 1;
    depth[static_cast<std::size_t>(g.q0)] = d;
    depth[static_cast<std::size_t>(g.q1)] = d;
    best = std::max(best, d);
  }
  return best;
}

inline ResourceReport count_resources(const Circuit& c) {
  ResourceReport r;
  std::set<int> measured;
  for (const Gate& g : c.ops) {
    switch (g.kind) {
      case GateKind::CNOT: ++r.cnot_count; break;
      case GateKind::T: case GateKind::Tdg: ++r.t_count; break;
      case GateKind::Rz: ++r.rz_count; break;
      case GateKind::Rx: case GateKind::Ry: ++r.rx_ry_count; break;
      case GateKind::H: case GateKind::X: case GateKind::Z:
      case GateKind::S: case GateKind::Sdg:
      case GateKind::XIfc: case GateKind::ZIfc:
        ++r.single_qubit_clifford_count; break;
      case GateKind::MeasZ: case GateKind::MeasX:
        ++r.measurement_count;
        measured.insert(g.q0);
        break;
      case GateKind::Heis: ++r.heis_macro_count; break;
      case GateKind::CZPow: ++r.czpow_macro_count; break;
      case GateKind::CZ: case GateKind::Swap: case GateKind::CZIfc: break;
    }
  }
  r.ancilla_count = static_cast<long long>(measured.size());
  r.two_qubit_depth = two_qubit_depth(c);
  return r;
}

// ---------------------------------------------------------------------------
// Text serialization (bit-exact; see README "Circuit text format").
// ---------------------------------------------------------------------------

inline std::string format_angle(double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

inline std::string serialize(const Circuit& c) {
  c.validate();
  std::string out = "qubits " + std::to_string(c.num_qubits) + "\n";
  if (c.num_clbits > 0) out += "clbits " + std::to_string(c.num_clbits) + "\n";
  for (const Gate& g : c.ops) {
    out += mnemonic(g.kind);
    if (is_measurement(g.kind)) {
      out += " " + std::to_string(g.q0) + " -> " + std::to_string(g.clbit);
    } else if (is_classically_controlled(g.kind)) {
      out += " " + std::to_string(g.clbit) + " ? " + std::to_string(g.q0);
      if (is_two_qubit(g.kind)) out += " " + std::to_string(g.q1);
    } else {
      if (has_param(g.kind)) out += " " + format_angle(g.param);
      out += " " + std::to_string(g.q0);
      if (is_two_qubit(g.kind)) out += " " + std::to_string(g.q1);
    }
    out += "\n";
  }
  return out;
}

namespace detail {

struct Token {
  std::string text;
  int column;  // 1-based
};

inline std::vector<Token> tokenize_line(const std::string& line) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') { ++i; continue; }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != '#')
      ++j;
    toks.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return toks;
}

inline int parse_index(const Token& t, int lineno) {
  if (t.text.empty() || t.text.find_first_not_of("0123456789") != std::string::npos)
    throw parse_error("expected a non-negative integer, got '" + t.text + "'",
                      lineno, t.column);
  return std::atoi(t.text.c_str());
}

inline double parse_real(const Token& t, int lineno) {
  const char* s = t.text.c_str();
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s || *end != '\0')
    throw parse_error("expected a real number, got '" + t.text + "'", lineno, t.column);
  return v;
}

}  // namespace detail

inline Circuit parse(const std::string& text) {
  using detail::Token;
  Circuit c;
  bool have_qubits = false;
  bool gates_started = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    pos = (nl == std::string::npos) ? text.size() + 1 : nl + 1;
    ++lineno;
    std::vector<Token> t = detail::tokenize_line(line);
    if (t.empty()) continue;
    const std::string& head = t[0].text;
    auto need = [&](std::size_t n) {
      if (t.size() != n + 1)
        throw parse_error("'" + head + "' expects " + std::to_string(n) +
                          " argument(s), got " + std::to_string(t.size() - 1), lineno,
                          t[0].column);
    };
    if (head == "qubits") {
      if (have_qubits) throw parse_error("duplicate 'qubits' header", lineno, t[0].column);
      need(1);
      c.num_qubits = detail::parse_index(t[1], lineno);
      have_qubits = true;
      continue;
    }
    if (head == "clbits") {
      if (!have_qubits || gates_started)
        throw parse_error("'clbits' must follow the 'qubits' header", lineno, t[0].column);
      need(1);
      c.num_clbits = detail::parse_index(t[1], lineno);
      continue;
    }
    if (!have_qubits)
      throw parse_error("first line must be 'qubits <n>'", lineno, t[0].column);
    gates_started = true;

    static const struct { const char* name; GateKind kind; } table[] = {
        {"h", GateKind::H}, {"x", GateKind::X}, {"z", GateKind::Z},
        {"s", GateKind::S}, {"sdg", GateKind::Sdg}, {"t", GateKind::T},
        {"tdg", GateKind::Tdg}, {"rx", GateKind::Rx}, {"ry", GateKind::Ry},
        {"rz", GateKind::Rz}, {"cnot", GateKind::CNOT}, {"cz", GateKind::CZ},
        {"swap", GateKind::Swap}, {"czpow", GateKind::CZPow}, {"heis", GateKind::Heis},
        {"measz", GateKind::MeasZ}, {"measx", GateKind::MeasX},
        {"x_ifc", GateKind::XIfc}, {"z_ifc", GateKind::ZIfc}, {"cz_ifc", GateKind::CZIfc}};
    GateKind kind{};
    bool found = false;
    for (const auto& e : table)
      if (head == e.name) { kind = e.kind; found = true; break; }
    if (!found) throw parse_error("unknown mnemonic '" + head + "'", lineno, t[0].column);

    Gate g{kind, -1, -1, -1, 0};
    if (is_measurement(kind)) {
      // measz q -> c
      need(3);
      if (t[2].text != "->")
        throw parse_error("expected '->'", lineno, t[2].column);
      g.q0 = detail::parse_index(t[1], lineno);
      g.clbit = detail::parse_index(t[3], lineno);
    } else if (is_classically_controlled(kind)) {
      // x_ifc c ? q   /  cz_ifc c ? q1 q2
      need(is_two_qubit(kind) ? 4 : 3);
      if (t[2].text != "?")
        throw parse_error("expected '?'", lineno, t[2].column);
      g.clbit = detail::parse_index(t[1], lineno);
      g.q0 = detail::parse_index(t[3], lineno);
      if (is_two_qubit(kind)) g.q1 = detail::parse_index(t[4], lineno);
    } else {
      std::size_t qargs = is_two_qubit(kind) ? 2 : 1;
      std::size_t nargs = qargs + (has_param(kind) ? 1 : 0);
      need(nargs);
      std::size_t qi = 1;
      if (has_param(kind)) { g.param = detail::parse_real(t[1], lineno); qi = 2; }
      g.q0 = detail::parse_index(t[qi], lineno);
      if (is_two_qubit(kind)) g.q1 = detail::parse_index(t[qi + 1], lineno);
    }
    c.ops.push_back(g);
  }
  if (!have_qubits) throw parse_error("missing 'qubits <n>' header", 1);
  try {
    c.validate();
  } catch (const validation_error& e) {
    throw parse_error(e.what(), lineno);
  }
  return c;
}

}  // namespace hamforge

#endif
