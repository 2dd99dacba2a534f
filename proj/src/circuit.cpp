#include "kclique/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "kclique/error.hpp"

namespace kclique {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t params;
};

constexpr std::array<KindInfo, 13> kKinds{{
    {GateKind::H, "H", 0},
    {GateKind::X, "X", 0},
    {GateKind::Z, "Z", 0},
    {GateKind::CX, "CX", 0},
    {GateKind::CZ, "CZ", 0},
    {GateKind::CCX, "CCX", 0},
    {GateKind::MCX, "MCX", 0},
    {GateKind::MCZ, "MCZ", 0},
    {GateKind::RY, "RY", 1},
    {GateKind::CRY, "CRY", 1},
    {GateKind::CCRY, "CCRY", 1},
    {GateKind::U3, "U3", 3},
    {GateKind::U2, "U2", 2},
}};

// Fixed operand count, or 0 for the variadic multi-controlled kinds.
std::size_t fixed_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
    case GateKind::RY:
    case GateKind::U3:
    case GateKind::U2:
      return 1;
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CRY:
      return 2;
    case GateKind::CCX:
    case GateKind::CCRY:
      return 3;
    case GateKind::MCX:
    case GateKind::MCZ:
      return 0;
  }
  return 0;
}

bool parse_size(std::string_view tok, std::size_t& out) {
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string format_angle(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) {
      return k.name;
    }
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) {
      return k.kind;
    }
  }
  return std::nullopt;
}

std::size_t gate_param_count(GateKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) {
      return k.params;
    }
  }
  return 0;
}

Gate::Gate(GateKind kind, std::vector<Qubit> qubits, std::array<double, 3> params)
    : kind_(kind), qubits_(std::move(qubits)), params_(params) {
  const std::size_t arity = fixed_arity(kind_);
  if (arity != 0 && qubits_.size() != arity) {
    throw Error(std::string(gate_name(kind_)) + " expects " + std::to_string(arity) +
                " operands, got " + std::to_string(qubits_.size()));
  }
  if (arity == 0 && qubits_.size() < 2) {
    throw Error(std::string(gate_name(kind_)) + " needs at least one control");
  }
  auto sorted = qubits_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(std::string(gate_name(kind_)) + " operands must be distinct");
  }
  const std::size_t np = gate_param_count(kind_);
  for (std::size_t i = 0; i < 3; ++i) {
    if (i >= np) {
      params_[i] = 0.0;
    } else if (!std::isfinite(params_[i])) {
      throw Error(std::string(gate_name(kind_)) + " angle must be finite");
    }
  }
}

Gate Gate::mcx(std::vector<Qubit> controls, Qubit target) {
  controls.push_back(target);
  return Gate(GateKind::MCX, std::move(controls));
}

Gate Gate::mcz(std::vector<Qubit> qubits) { return Gate(GateKind::MCZ, std::move(qubits)); }

Gate Gate::inverse() const {
  switch (kind_) {
    case GateKind::RY:
    case GateKind::CRY:
    case GateKind::CCRY:
      return Gate(kind_, qubits_, {-params_[0], 0, 0});
    case GateKind::U3:
      // U3(t, p, l)^-1 = U3(-t, -l, -p)
      return Gate(kind_, qubits_, {-params_[0], -params_[2], -params_[1]});
    case GateKind::U2:
      // U2(p, l)^-1 = U3(-pi/2, -l, -p) = U2(pi - l, -p - pi)
      return Gate(kind_, qubits_, {M_PI - params_[1], -params_[0] - M_PI, 0});
    default:
      return *this;
  }
}

Gate Gate::remapped(std::span<const Qubit> map) const {
  std::vector<Qubit> q;
  q.reserve(qubits_.size());
  for (Qubit v : qubits_) {
    if (v >= map.size()) {
      throw Error("qubit map too small for operand " + std::to_string(v));
    }
    q.push_back(map[v]);
  }
  return Gate(kind_, std::move(q), params_);
}

std::string Gate::to_string() const {
  std::string out(gate_name(kind_));
  out += ' ';
  for (std::size_t i = 0; i < qubits_.size(); ++i) {
    if (i) {
      out += ',';
    }
    out += std::to_string(qubits_[i]);
  }
  for (std::size_t i = 0; i < gate_param_count(kind_); ++i) {
    out += ' ';
    out += format_angle(params_[i]);
  }
  return out;
}

std::vector<Qubit> Register::qubits() const {
  std::vector<Qubit> q(size);
  for (std::size_t i = 0; i < size; ++i) {
    q[i] = start + i;
  }
  return q;
}

const Register& Circuit::add_register(std::string name, std::size_t size) {
  if (find_register(name) != nullptr) {
    throw Error("duplicate register '" + name + "'");
  }
  registers_.push_back(Register{std::move(name), num_qubits_, size});
  num_qubits_ += size;
  return registers_.back();
}

const Register* Circuit::find_register(std::string_view name) const {
  for (const auto& r : registers_) {
    if (r.name == name) {
      return &r;
    }
  }
  return nullptr;
}

const Register& Circuit::reg(std::string_view name) const {
  if (const auto* r = find_register(name)) {
    return *r;
  }
  throw Error("no register named '" + std::string(name) + "'");
}

void Circuit::append(Gate gate) {
  for (Qubit q : gate.qubits()) {
    if (q >= num_qubits_) {
      throw Error("gate " + gate.to_string() + " exceeds circuit width " +
                  std::to_string(num_qubits_));
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw Error("width mismatch: " + std::to_string(num_qubits_) + " vs " +
                std::to_string(other.num_qubits_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void Circuit::append_mapped(const Circuit& other, std::span<const Qubit> map) {
  for (const auto& g : other.gates_) {
    append(g.remapped(map));
  }
}

void Circuit::append_on(const Circuit& other, const Register& target) {
  if (other.num_qubits() != target.size) {
    throw Error("cannot place a " + std::to_string(other.num_qubits()) +
                "-qubit circuit on register '" + target.name + "' of size " +
                std::to_string(target.size));
  }
  const auto map = target.qubits();
  append_mapped(other, map);
}

Circuit Circuit::adjoint() const {
  Circuit out = *this;
  out.gates_.clear();
  out.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
    out.gates_.push_back(it->inverse());
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  Circuit out = a;
  out.append(b);
  return out;
}

CircuitMetrics metrics(const Circuit& c) {
  CircuitMetrics m;
  m.num_qubits = c.num_qubits();
  m.size = c.size();
  std::vector<std::size_t> level(c.num_qubits(), 0);
  for (const auto& g : c.gates()) {
    std::size_t start = 0;
    for (Qubit q : g.qubits()) {
      start = std::max(start, level[q]);
    }
    for (Qubit q : g.qubits()) {
      level[q] = start + 1;
    }
    m.depth = std::max(m.depth, start + 1);
    ++m.counts[g.kind()];
  }
  return m;
}

std::string dump_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.num_qubits() << '\n';
  for (const auto& r : c.registers()) {
    out << "register " << r.name << ' ' << r.start << ' ' << r.size << '\n';
  }
  for (const auto& g : c.gates()) {
    out << g.to_string() << '\n';
  }
  return out.str();
}

Circuit parse_circuit_dump(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  Circuit c;
  bool have_width = false;
  std::size_t width = 0;

  const auto fill_width = [&] {
    if (c.num_qubits() < width) {
      c.add_qubits(width - c.num_qubits());
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head == "qubits") {
      if (have_width || !(ls >> width)) {
        throw ParseError(line_no, "bad or repeated 'qubits' header");
      }
      have_width = true;
      continue;
    }
    if (!have_width) {
      throw ParseError(line_no, "missing 'qubits' header");
    }
    if (head == "register") {
      std::string name;
      std::size_t start = 0;
      std::size_t size = 0;
      if (!(ls >> name >> start >> size) || !c.empty() || start < c.num_qubits() ||
          start + size > width) {
        throw ParseError(line_no, "bad register declaration");
      }
      c.add_qubits(start - c.num_qubits());
      c.add_register(name, size);
      continue;
    }
    fill_width();
    const auto kind = gate_kind_from_name(head);
    if (!kind) {
      throw ParseError(line_no, "unknown gate '" + head + "'");
    }
    std::string operands;
    if (!(ls >> operands)) {
      throw ParseError(line_no, "missing operands");
    }
    std::vector<Qubit> qubits;
    std::size_t pos = 0;
    while (pos <= operands.size()) {
      auto comma = operands.find(',', pos);
      if (comma == std::string::npos) {
        comma = operands.size();
      }
      std::size_t q = 0;
      if (!parse_size(std::string_view(operands).substr(pos, comma - pos), q)) {
        throw ParseError(line_no, "bad operand list '" + operands + "'");
      }
      qubits.push_back(q);
      pos = comma + 1;
    }
    std::array<double, 3> params{};
    for (std::size_t i = 0; i < gate_param_count(*kind); ++i) {
      if (!(ls >> params[i])) {
        throw ParseError(line_no, "missing angle");
      }
    }
    try {
      c.append(Gate(*kind, std::move(qubits), params));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_width) {
    throw ParseError(line_no, "missing 'qubits' header");
  }
  fill_width();
  return c;
}

}  // namespace kclique
