#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sopra {

// Identifier namespaces. All are plain strings at runtime; the parser and
// validator guarantee uniqueness within a loaded specification.
using AgentId = std::string;
using RoleId = std::string;
using ObjectId = std::string;
using ValueId = std::string;
using ActionSymbol = std::string;
using FactName = std::string;

using AgentSet = std::set<AgentId>;

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndeclaredSymbol : EngineError {
  using EngineError::EngineError;
};
struct UnknownAgent : EngineError {
  using EngineError::EngineError;
};
struct EmptyGroup : EngineError {
  using EngineError::EngineError;
};
struct Unachievable : EngineError {
  using EngineError::EngineError;
};
struct CapabilityViolation : EngineError {
  using EngineError::EngineError;
};

// A term appearing in a fact or action argument position.
//   Literal — a concrete agent, object or constant name.
//   Role    — stands for an agent playing that role. Free role terms are
//             existentially quantified per atom; inside a norm the normed
//             role is bound to the agent under scrutiny.
//   Self    — the agent an expression is being evaluated for.
struct Term {
  enum class Kind { Literal, Role, Self };
  Kind kind = Kind::Literal;
  std::string text;

  static Term lit(std::string s) { return {Kind::Literal, std::move(s)}; }
  static Term role(std::string s) { return {Kind::Role, std::move(s)}; }
  static Term self() { return {Kind::Self, "self"}; }

  bool is_ground() const { return kind == Kind::Literal; }
  auto operator<=>(const Term&) const = default;
};

struct Fact {
  FactName pred;
  std::vector<Term> args;

  bool is_ground() const {
    for (const auto& a : args)
      if (!a.is_ground()) return false;
    return true;
  }
  auto operator<=>(const Fact&) const = default;
};

Fact ground_fact(FactName pred, std::vector<std::string> args);
std::string to_string(const Term& t);
std::string to_string(const Fact& f);

// An atomic action instance or pattern. Ground when every argument is a
// literal; patterns (role/self arguments) appear in norms, strategies and
// counts-as rules.
struct AtomicAction {
  ActionSymbol symbol;
  std::vector<Term> args;

  bool is_ground() const {
    for (const auto& a : args)
      if (!a.is_ground()) return false;
    return true;
  }
  auto operator<=>(const AtomicAction&) const = default;
};

std::string to_string(const AtomicAction& a);

// How a set of performers is named in conditions, norms and strategies.
struct GroupExpr {
  enum class Kind { Role, All, Agents };
  Kind kind = Kind::All;
  RoleId role;
  AgentSet agents;

  static GroupExpr all() { return {Kind::All, {}, {}}; }
  static GroupExpr of_role(RoleId r) { return {Kind::Role, std::move(r), {}}; }
  static GroupExpr of_agents(AgentSet a) { return {Kind::Agents, {}, std::move(a)}; }
  auto operator<=>(const GroupExpr&) const = default;
};

std::string to_string(const GroupExpr& g);

// Condition expression tree. Evaluation is pure and closed-world over the
// fact store; `done` defaults to the most-recent-tick reading and can be
// widened to the whole history with the `any` qualifier.
struct Condition {
  enum class Kind {
    True,
    FactAtom,   // fact
    Play,       // play(agent, role)
    Done,       // done [any] (group, action)
    Do,         // do(group, action) — an event of the current tick
    Cap,        // cap(agent, action-symbol)
    Not,
    And,
    Or,
    ForallRole  // forall(role, inner) — inner holds for every agent playing role
  };

  Kind kind = Kind::True;
  Fact fact;                        // FactAtom
  Term agent;                       // Play, Cap
  RoleId role;                      // Play, ForallRole
  ActionSymbol cap_action;          // Cap
  GroupExpr group;                  // Done, Do
  AtomicAction action;              // Done, Do
  bool done_any = false;            // Done qualifier
  std::vector<Condition> children;  // Not(1), And(n), Or(n), ForallRole(1)

  static Condition truth() { return {}; }
  static Condition atom(Fact f) {
    Condition c;
    c.kind = Kind::FactAtom;
    c.fact = std::move(f);
    return c;
  }
  static Condition play(Term a, RoleId r) {
    Condition c;
    c.kind = Kind::Play;
    c.agent = std::move(a);
    c.role = std::move(r);
    return c;
  }
  static Condition cap(Term a, ActionSymbol s) {
    Condition c;
    c.kind = Kind::Cap;
    c.agent = std::move(a);
    c.cap_action = std::move(s);
    return c;
  }
  static Condition done(GroupExpr g, AtomicAction a, bool any = false) {
    Condition c;
    c.kind = Kind::Done;
    c.group = std::move(g);
    c.action = std::move(a);
    c.done_any = any;
    return c;
  }
  static Condition doing(GroupExpr g, AtomicAction a) {
    Condition c;
    c.kind = Kind::Do;
    c.group = std::move(g);
    c.action = std::move(a);
    return c;
  }
  static Condition negate(Condition inner) {
    Condition c;
    c.kind = Kind::Not;
    c.children.push_back(std::move(inner));
    return c;
  }
  static Condition conj(std::vector<Condition> parts);
  static Condition disj(std::vector<Condition> parts);
  static Condition forall_role(RoleId r, Condition inner) {
    Condition c;
    c.kind = Kind::ForallRole;
    c.role = std::move(r);
    c.children.push_back(std::move(inner));
    return c;
  }

  bool operator==(const Condition&) const = default;
};

std::string to_string(const Condition& c);

// Discrete-tick world state: ground facts, a clock, and role assignment.
struct WorldState {
  std::set<Fact> facts;
  int clock = 0;
  std::set<std::pair<AgentId, RoleId>> plays;

  bool holds(const Fact& f) const { return facts.count(f) > 0; }
  void assert_fact(const Fact& f);
  void retract_fact(const Fact& f) { facts.erase(f); }
  bool plays_role(const AgentId& a, const RoleId& r) const {
    return plays.count({a, r}) > 0;
  }
  AgentSet agents_playing(const RoleId& r) const;
};

struct TraceEvent {
  int tick = 0;
  AgentSet group;
  AtomicAction action;
  bool derived = false;  // produced by counts-as expansion

  auto operator<=>(const TraceEvent&) const = default;
};

std::string to_string(const TraceEvent& e);

struct Trace {
  std::vector<TraceEvent> events;

  bool empty() const { return events.empty(); }
  std::size_t size() const { return events.size(); }
  const TraceEvent& back() const { return events.back(); }
  void push(TraceEvent e) { events.push_back(std::move(e)); }

  // Events sharing the most recent tick that has any event.
  std::vector<const TraceEvent*> last_tick_events() const;
  std::vector<const TraceEvent*> events_at(int tick) const;
};

}  // namespace sopra
