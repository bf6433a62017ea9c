#include "sopra/model.hpp"

#include <sstream>

namespace sopra {

Fact ground_fact(FactName pred, std::vector<std::string> args) {
  Fact f;
  f.pred = std::move(pred);
  for (auto& a : args) f.args.push_back(Term::lit(std::move(a)));
  return f;
}

std::string to_string(const Term& t) {
  return t.kind == Term::Kind::Self ? "self" : t.text;
}

static std::string args_to_string(const std::vector<Term>& args) {
  std::string out = "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ",";
    out += to_string(args[i]);
  }
  out += ")";
  return out;
}

std::string to_string(const Fact& f) {
  if (f.args.empty()) return f.pred;
  return f.pred + args_to_string(f.args);
}

std::string to_string(const AtomicAction& a) {
  return a.symbol + args_to_string(a.args);
}

std::string to_string(const GroupExpr& g) {
  switch (g.kind) {
    case GroupExpr::Kind::All:
      return "all";
    case GroupExpr::Kind::Role:
      return g.role;
    case GroupExpr::Kind::Agents: {
      std::string out = "{";
      bool first = true;
      for (const auto& a : g.agents) {
        if (!first) out += ",";
        out += a;
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

Condition Condition::conj(std::vector<Condition> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Condition c;
  c.kind = Kind::And;
  c.children = std::move(parts);
  return c;
}

Condition Condition::disj(std::vector<Condition> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  Condition c;
  c.kind = Kind::Or;
  c.children = std::move(parts);
  return c;
}

std::string to_string(const Condition& c) {
  using K = Condition::Kind;
  switch (c.kind) {
    case K::True:
      return "true";
    case K::FactAtom:
      return to_string(c.fact);
    case K::Play:
      return "play(" + to_string(c.agent) + "," + c.role + ")";
    case K::Done:
      return std::string("done") + (c.done_any ? " any" : "") + "(" +
             to_string(c.group) + "," + to_string(c.action) + ")";
    case K::Do:
      return "do(" + to_string(c.group) + "," + to_string(c.action) + ")";
    case K::Cap:
      return "cap(" + to_string(c.agent) + "," + c.cap_action + ")";
    case K::Not:
      return "!(" + to_string(c.children.front()) + ")";
    case K::And:
    case K::Or: {
      std::string op = c.kind == K::And ? " & " : " | ";
      std::string out = "(";
      for (std::size_t i = 0; i < c.children.size(); ++i) {
        if (i) out += op;
        out += to_string(c.children[i]);
      }
      return out + ")";
    }
    case K::ForallRole:
      return "forall(" + c.role + ", " + to_string(c.children.front()) + ")";
  }
  return "?";
}

void WorldState::assert_fact(const Fact& f) {
  if (!f.is_ground()) throw EngineError("cannot assert non-ground fact " + to_string(f));
  facts.insert(f);
}

AgentSet WorldState::agents_playing(const RoleId& r) const {
  AgentSet out;
  for (const auto& [a, role] : plays)
    if (role == r) out.insert(a);
  return out;
}

std::string to_string(const TraceEvent& e) {
  std::string out = e.derived ? "~" : "";
  out += std::to_string(e.tick) + " ";
  bool first = true;
  for (const auto& a : e.group) {
    if (!first) out += ",";
    out += a;
    first = false;
  }
  out += " " + to_string(e.action);
  return out;
}

std::vector<const TraceEvent*> Trace::last_tick_events() const {
  std::vector<const TraceEvent*> out;
  if (events.empty()) return out;
  int t = events.back().tick;
  for (const auto& e : events)
    if (e.tick == t) out.push_back(&e);
  return out;
}

std::vector<const TraceEvent*> Trace::events_at(int tick) const {
  std::vector<const TraceEvent*> out;
  for (const auto& e : events)
    if (e.tick == tick) out.push_back(&e);
  return out;
}

}  // namespace sopra
