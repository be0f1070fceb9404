#include "crnkit/model_io.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <sstream>

#include "crnkit/error.hpp"

namespace crn {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool number_start(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-'; }

// Tokenizer over one logical line; columns are 1-based.
struct LineCursor {
  const std::string& s;
  int line;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  int col() { return int(pos) + 1; }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void error(const std::string& msg) { fail(ErrKind::ParseError, msg, line, col()); }

  std::string take_ident() {
    skip_ws();
    if (pos >= s.size() || !ident_start(s[pos])) return "";
    size_t start = pos;
    while (pos < s.size() && ident_char(s[pos])) ++pos;
    return s.substr(start, pos - start);
  }

  std::string take_number() {
    skip_ws();
    if (pos >= s.size() || !number_start(s[pos])) return "";
    size_t start = pos;
    ++pos;
    while (pos < s.size()) {
      char c = s[pos];
      char prev = s[pos - 1];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == 'e' ||
          c == 'E' || ((c == '+' || c == '-') && (prev == 'e' || prev == 'E')))
        ++pos;
      else
        break;
    }
    return s.substr(start, pos - start);
  }

  void expect(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) != 0) error("expected '" + tok + "'");
    pos += tok.size();
  }

  std::string expect_ident(const std::string& what) {
    std::string id = take_ident();
    if (id.empty()) error("expected " + what);
    return id;
  }

  Rat expect_rational(const std::string& what) {
    int c = (skip_ws(), col());
    std::string num = take_number();
    if (num.empty()) error("expected " + what);
    try {
      return parse_rational(num);
    } catch (const std::exception&) {
      fail(ErrKind::ParseError, "malformed number '" + num + "'", line, c);
    }
  }
};

// Splits into (line number, content) pairs with comments stripped.
std::vector<std::pair<int, std::string>> logical_lines(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::istringstream in(text);
  std::string raw;
  int ln = 0;
  while (std::getline(in, raw)) {
    ++ln;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
      raw.pop_back();
    size_t first = raw.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    out.emplace_back(ln, raw);
  }
  return out;
}

Complex parse_complex(LineCursor& cur, const Network& net) {
  Complex c;
  cur.skip_ws();
  size_t save = cur.pos;
  std::string first = cur.take_number();
  if (first == "0") {
    size_t after = cur.pos;
    std::string next = cur.take_ident();
    cur.pos = after;
    if (next.empty() || !net.species_index(next)) return c;  // the empty complex
  }
  cur.pos = save;

  for (;;) {
    Rat coeff(1);
    cur.skip_ws();
    int term_col = cur.col();
    if (number_start(cur.peek())) {
      coeff = cur.expect_rational("coefficient");
      if (coeff <= 0) fail(ErrKind::ParseError, "complex coefficients must be positive", cur.line, term_col);
    }
    int name_col = (cur.skip_ws(), cur.col());
    std::string name = cur.expect_ident("species name");
    auto idx = net.species_index(name);
    if (!idx) fail(ErrKind::UndeclaredSpecies, "undeclared species '" + name + "'", cur.line, name_col);
    c.add(*idx, coeff);
    if (cur.peek() != '+') break;
    cur.expect("+");
  }
  return c;
}

std::map<int, Rat> parse_orders_clause(LineCursor& cur, const Network& net) {
  cur.expect(":");
  std::map<int, Rat> orders;
  while (!cur.done()) {
    int c0 = cur.col();
    std::string name = cur.expect_ident("species name in orders clause");
    auto idx = net.species_index(name);
    if (!idx) fail(ErrKind::UndeclaredSpecies, "undeclared species '" + name + "'", cur.line, c0);
    cur.expect("=");
    Rat v = cur.expect_rational("kinetic order");
    if (!orders.emplace(*idx, v).second)
      fail(ErrKind::ParseError, "duplicate order for '" + name + "'", cur.line, c0);
  }
  return orders;
}

void parse_param_line(LineCursor& cur, std::map<std::string, double>& params) {
  std::string name = cur.expect_ident("parameter name");
  cur.expect("=");
  Rat v = cur.expect_rational("parameter value");
  if (v <= 0) fail(ErrKind::NonpositiveRate, "parameter '" + name + "' must be positive", cur.line);
  if (!params.emplace(name, rat_to_double(v)).second)
    fail(ErrKind::ParseError, "parameter '" + name + "' defined twice", cur.line);
  if (!cur.done()) cur.error("trailing tokens after parameter value");
}

}  // namespace

Model parse_network_file(const std::string& text) {
  Network net;
  struct Pending {
    Complex reactant;
    std::string rate;
    std::optional<std::map<int, Rat>> orders;
  };
  std::vector<Pending> pending;
  std::map<std::string, double> params;
  std::set<std::string> labels;

  for (auto& [ln, content] : logical_lines(text)) {
    LineCursor cur{content, ln};
    std::string head = cur.take_ident();
    if (head == "species") {
      cur.expect(":");
      int count = 0;
      while (!cur.done()) {
        int c0 = cur.col();
        std::string name = cur.expect_ident("species name");
        try {
          net.add_species(name);
        } catch (const Error& e) {
          fail(e.kind, e.what(), ln, c0);
        }
        ++count;
      }
      if (count == 0) cur.error("species list is empty");
    } else if (head == "reaction") {
      int lcol = (cur.skip_ws(), cur.col());
      std::string label = cur.expect_ident("reaction label");
      if (!labels.insert(label).second)
        fail(ErrKind::DuplicateLabel, "reaction label '" + label + "' reused", ln, lcol);
      cur.expect(":");
      Complex reactant = parse_complex(cur, net);
      cur.expect("->");
      Complex product = parse_complex(cur, net);
      if (cur.expect_ident("'rate'") != "rate") cur.error("expected 'rate'");
      cur.expect("=");
      std::string rate = cur.expect_ident("rate name");
      std::optional<std::map<int, Rat>> orders;
      if (!cur.done()) {
        if (cur.expect_ident("'orders'") != "orders") cur.error("expected 'orders'");
        orders = parse_orders_clause(cur, net);
      }
      try {
        net.add_reaction(label, reactant, product);
      } catch (const Error& e) {
        fail(e.kind, e.what(), ln);
      }
      pending.push_back({reactant, rate, std::move(orders)});
    } else if (head == "param") {
      parse_param_line(cur, params);
    } else if (head.empty()) {
      cur.error("expected a directive");
    } else {
      fail(ErrKind::ParseError, "unknown directive '" + head + "'", ln, 1);
    }
  }

  net.finalize();
  int m = net.species_count();
  KineticModel km;
  km.f = RatMatrix(int(pending.size()), m);
  for (size_t i = 0; i < pending.size(); ++i) {
    const Pending& p = pending[i];
    if (p.orders) {
      for (auto& [sp, v] : *p.orders) km.f.at(int(i), sp) = v;
    } else {
      km.f.set_row(int(i), p.reactant.dense(m));
    }
    km.rate_names.push_back(p.rate);
    auto it = params.find(p.rate);
    km.rate_values.push_back(it == params.end() ? std::optional<double>{} : it->second);
  }
  return {std::move(net), std::move(km)};
}

std::string render_network_file(const Model& model) {
  const Network& net = model.net;
  const KineticModel& km = model.kin;
  std::ostringstream os;
  os << "species:";
  for (const auto& sp : net.species()) os << " " << sp.name;
  os << "\n";

  int m = net.species_count();
  for (int i = 0; i < net.reaction_count(); ++i) {
    const Reaction& rx = net.reaction_at(i);
    os << "reaction " << rx.label << ": " << net.complex_to_string(rx.reactant) << " -> "
       << net.complex_to_string(rx.product) << " rate=" << km.rate_names[i];
    std::vector<Rat> mass = net.complex_at(rx.reactant).dense(m);
    bool is_mass_action = true;
    for (int j = 0; j < m; ++j)
      if (km.f.at(i, j) != mass[j]) is_mass_action = false;
    if (!is_mass_action) {
      os << " orders:";
      for (int j = 0; j < m; ++j)
        if (mass[j] != 0 || km.f.at(i, j) != 0)
          os << " " << net.species_at(j).name << "=" << rat_to_string(km.f.at(i, j));
    }
    os << "\n";
  }

  std::set<std::string> emitted;
  for (int i = 0; i < net.reaction_count(); ++i) {
    if (!km.rate_values[i]) continue;
    const std::string& name = km.rate_names[i];
    if (!emitted.insert(name).second) continue;
    os << "param " << name << " = " << format_double(*km.rate_values[i]) << "\n";
  }
  return os.str();
}

BoxModel parse_box_file(const std::string& text) {
  BoxModel bm;
  std::set<std::string> pool_set;

  auto require_pool = [&](LineCursor& cur, const std::string& what) {
    int c0 = (cur.skip_ws(), cur.col());
    std::string name = cur.expect_ident(what);
    if (!pool_set.count(name))
      fail(ErrKind::UndeclaredSpecies, "undeclared pool '" + name + "'", cur.line, c0);
    return name;
  };

  for (auto& [ln, content] : logical_lines(text)) {
    LineCursor cur{content, ln};
    std::string head = cur.take_ident();
    if (head == "pool") {
      std::string name = cur.expect_ident("pool name");
      if (!pool_set.insert(name).second)
        fail(ErrKind::ParseError, "pool '" + name + "' declared twice", ln);
      bm.pools.push_back(name);
      if (!cur.done()) cur.error("trailing tokens after pool name");
    } else if (head == "transfer") {
      BoxTransfer tr;
      tr.line = ln;
      tr.source = require_pool(cur, "source pool");
      cur.expect("->");
      tr.target = require_pool(cur, "target pool");

      auto clause_keyword = [](const std::string& w) {
        return w == "modifiers" || w == "translate" || w == "rate" || w == "orders";
      };
      // Reads pool names until the next clause keyword.
      auto pool_list = [&](std::vector<std::string>& out, const std::string& what) {
        while (ident_start(cur.peek())) {
          size_t mark = cur.pos;
          int c0 = cur.col();
          std::string name = cur.take_ident();
          if (clause_keyword(name)) {
            cur.pos = mark;
            break;
          }
          if (!pool_set.count(name))
            fail(ErrKind::UndeclaredSpecies, "undeclared pool '" + name + "'", ln, c0);
          out.push_back(name);
        }
        if (out.empty()) cur.error(what + " list is empty");
      };

      cur.skip_ws();
      size_t save = cur.pos;
      std::string word = cur.take_ident();
      if (word == "modifiers") {
        cur.expect(":");
        pool_list(tr.modifiers, "modifier");
        std::set<std::string> seen;
        for (const std::string& name : tr.modifiers)
          if (!seen.insert(name).second)
            fail(ErrKind::ParseError, "modifier '" + name + "' listed twice", ln);
        save = cur.pos;
        word = cur.take_ident();
      }
      if (word == "translate") {
        cur.expect(":");
        pool_list(tr.translation, "translation");
        save = cur.pos;
        word = cur.take_ident();
      }
      if (word != "rate") {
        cur.pos = save;
        cur.error("expected 'rate'");
      }
      cur.expect("=");
      tr.rate_name = cur.expect_ident("rate name");
      if (!cur.done()) {
        if (cur.expect_ident("'orders'") != "orders") cur.error("expected 'orders'");
        std::set<std::string> allowed(tr.modifiers.begin(), tr.modifiers.end());
        allowed.insert(tr.source);
        cur.expect(":");
        tr.has_orders = true;
        while (!cur.done()) {
          int c0 = cur.col();
          std::string name = require_pool(cur, "species name in orders clause");
          if (!allowed.count(name))
            fail(ErrKind::InvalidArgument,
                 "order on '" + name + "' which is neither the source nor a modifier", ln, c0);
          cur.expect("=");
          Rat v = cur.expect_rational("kinetic order");
          if (!tr.orders.emplace(name, v).second)
            fail(ErrKind::ParseError, "duplicate order for '" + name + "'", ln, c0);
        }
      }
      bm.transfers.push_back(std::move(tr));
    } else if (head == "param") {
      parse_param_line(cur, bm.params);
    } else if (head.empty()) {
      cur.error("expected a directive");
    } else {
      fail(ErrKind::ParseError, "unknown directive '" + head + "'", ln, 1);
    }
  }
  return bm;
}

Model box_model_to_crn(const BoxModel& bm) {
  Network net;
  for (const auto& p : bm.pools) net.add_species(p);

  auto pool_index = [&](const std::string& name, int line) {
    auto idx = net.species_index(name);
    if (!idx) fail(ErrKind::UndeclaredSpecies, "undeclared pool '" + name + "'", line);
    return *idx;
  };

  struct Pending {
    Complex reactant;
    const BoxTransfer* tr;
  };
  std::vector<Pending> pending;
  for (size_t i = 0; i < bm.transfers.size(); ++i) {
    const BoxTransfer& tr = bm.transfers[i];
    int src = pool_index(tr.source, tr.line);
    int dst = pool_index(tr.target, tr.line);

    Complex lift;
    for (const auto& name : tr.modifiers) lift.add(pool_index(name, tr.line), 1);
    for (const auto& name : tr.translation) lift.add(pool_index(name, tr.line), 1);
    Complex reactant = lift, product = lift;
    reactant.add(src, 1);
    product.add(dst, 1);

    for (int a = 0; a < net.species_count(); ++a) {
      Rat expect = Rat(a == dst ? 1 : 0) - Rat(a == src ? 1 : 0);
      if (product.coeff(a) - reactant.coeff(a) != expect)
        fail(ErrKind::Internal, "transfer lifting changed the reaction vector");
    }

    std::set<std::string> allowed(tr.modifiers.begin(), tr.modifiers.end());
    allowed.insert(tr.source);
    for (const auto& [name, v] : tr.orders)
      if (!allowed.count(name))
        fail(ErrKind::InvalidArgument,
             "order on '" + name + "' which is neither the source nor a modifier", tr.line);

    std::string label = "R" + std::to_string(i + 1);
    try {
      net.add_reaction(label, reactant, product);
    } catch (const Error& e) {
      fail(e.kind, e.what(), tr.line);
    }
    pending.push_back({reactant, &tr});
  }

  net.finalize();
  int m = net.species_count();
  KineticModel km;
  km.f = RatMatrix(int(pending.size()), m);
  for (size_t i = 0; i < pending.size(); ++i) {
    const BoxTransfer& tr = *pending[i].tr;
    if (tr.has_orders) {
      for (const auto& [name, v] : tr.orders) km.f.at(int(i), pool_index(name, tr.line)) = v;
    } else {
      km.f.set_row(int(i), pending[i].reactant.dense(m));
    }
    km.rate_names.push_back(tr.rate_name);
    auto it = bm.params.find(tr.rate_name);
    if (it != bm.params.end() && it->second <= 0)
      fail(ErrKind::NonpositiveRate, "rate '" + tr.rate_name + "' must be positive", tr.line);
    km.rate_values.push_back(it == bm.params.end() ? std::optional<double>{} : it->second);
  }
  return {std::move(net), std::move(km)};
}

Model dac_preset(const DacParameters& params) {
  for (double v : {params.k1, params.k2, params.k4, params.k5, params.k6, params.am, params.beta})
    if (!(v > 0)) fail(ErrKind::NonpositiveRate, "preset rate constants must be positive");

  Network net;
  for (const char* name : {"A1", "A2", "A3", "A4", "A5"}) net.add_species(name);

  Complex ex1, ex2, a2, a3, a4, a5;
  ex1.add(0, 1);
  ex1.add(1, 2);
  ex2.add(0, 2);
  ex2.add(1, 1);
  a2.add(1, 1);
  a3.add(2, 1);
  a4.add(3, 1);
  a5.add(4, 1);

  net.add_reaction("R1", ex1, ex2);
  net.add_reaction("R2", ex2, ex1);
  net.add_reaction("R3", a2, a3);
  net.add_reaction("R4", a3, a2);
  net.add_reaction("R5", a4, a2);
  net.add_reaction("R6", a2, a5);
  net.add_reaction("R7", a5, a4);
  net.finalize();

  KineticModel km;
  km.f = RatMatrix(7, 5);
  km.f.at(0, 0) = params.p1;
  km.f.at(0, 1) = params.q1;
  km.f.at(1, 0) = params.p2;
  km.f.at(1, 1) = params.q2;
  km.f.at(2, 1) = 1;
  km.f.at(3, 2) = 1;
  km.f.at(4, 3) = 1;
  km.f.at(5, 1) = 1;
  km.f.at(6, 4) = 1;
  km.rate_names = {"k1", "k2", "am", "am_beta", "k4", "k5", "k6"};
  km.rate_values = {params.k1, params.k2,           params.am, params.am * params.beta,
                    params.k4, params.k5,           params.k6};
  return {std::move(net), std::move(km)};
}

void apply_dac_override(DacParameters& params, const std::string& key, const std::string& value) {
  Rat v;
  try {
    v = parse_rational(value);
  } catch (const std::exception&) {
    fail(ErrKind::InvalidArgument, "malformed value '" + value + "' for " + key);
  }
  if (key == "p1" || key == "p2" || key == "q1" || key == "q2") {
    if (key == "p1") params.p1 = v;
    else if (key == "p2") params.p2 = v;
    else if (key == "q1") params.q1 = v;
    else params.q2 = v;
    return;
  }
  double d = rat_to_double(v);
  if (key == "k1" || key == "k2" || key == "k4" || key == "k5" || key == "k6" || key == "am" ||
      key == "beta") {
    if (!(d > 0)) fail(ErrKind::NonpositiveRate, "parameter " + key + " must be positive");
    if (key == "k1") params.k1 = d;
    else if (key == "k2") params.k2 = d;
    else if (key == "k4") params.k4 = d;
    else if (key == "k5") params.k5 = d;
    else if (key == "k6") params.k6 = d;
    else if (key == "am") params.am = d;
    else params.beta = d;
    return;
  }
  fail(ErrKind::InvalidArgument, "unknown parameter '" + key + "'");
}

}  // namespace crn
