#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sopra/action.hpp"
#include "sopra/model.hpp"

namespace sopra {

// Declared parameter kinds for possible actions. Object parameters are
// checked against affordances; const parameters are opaque.
enum class ParamKind { Object, Const };

struct EffectAtom {
  bool retract = false;
  Fact fact;  // may use self/role terms; grounded per performer
  bool operator==(const EffectAtom&) const = default;
};

struct PossibleActionDecl {
  ActionSymbol symbol;
  std::vector<ParamKind> params;
  std::vector<EffectAtom> effects;
  bool operator==(const PossibleActionDecl&) const = default;
};

struct ResourceKind {
  ObjectId kind;
  std::vector<ActionSymbol> affords;
  bool operator==(const ResourceKind&) const = default;
};

struct PurposeDecl {
  AtomicAction action;            // action shape the purpose attaches to
  std::optional<RoleId> role;     // scope: restrict to performers of this role
  std::vector<Fact> formula;      // the goal facts, self-parametric allowed
  bool operator==(const PurposeDecl&) const = default;
};

struct PromotesRule {
  std::optional<RoleId> role;  // guard on the performer
  ActionSymbol action;
  ValueId value;
  bool demotes = false;
  bool operator==(const PromotesRule&) const = default;
};

struct CountsAsRule {
  std::optional<RoleId> role;  // guard on the performer
  AtomicAction from;
  AtomicAction to;
  bool operator==(const CountsAsRule&) const = default;
};

// A plan-pattern node: achievement-annotated abstract steps composed with
// choice, interleaving, sequencing and iteration.
struct PlanPattern {
  enum class Kind { Step, Choice, Parallel, Seq, Star };
  Kind kind = Kind::Step;
  std::string step_id;               // Step
  std::vector<Fact> formula;         // Step: the landmark facts
  std::optional<RoleId> role;        // Step: eligible performer constraint
  std::vector<PlanPattern> children; // composites

  static PlanPattern step(std::string id, std::vector<Fact> phi,
                          std::optional<RoleId> r = std::nullopt) {
    PlanPattern p;
    p.step_id = std::move(id);
    p.formula = std::move(phi);
    p.role = std::move(r);
    return p;
  }
  static PlanPattern combine(Kind k, PlanPattern l, PlanPattern r) {
    PlanPattern p;
    p.kind = k;
    p.children.push_back(std::move(l));
    p.children.push_back(std::move(r));
    return p;
  }
  static PlanPattern star(PlanPattern body) {
    PlanPattern p;
    p.kind = Kind::Star;
    p.children.push_back(std::move(body));
    return p;
  }
  std::size_t node_count() const {
    std::size_t n = 1;
    for (const auto& c : children) n += c.node_count();
    return n;
  }
  bool operator==(const PlanPattern&) const = default;
};

std::string to_string(const PlanPattern& p);

// A strategy's expected action: a concrete atomic action or the whole plan
// pattern of the practice ("everyone does their part of the practice").
struct StrategyAction {
  enum class Kind { Atomic, PracticeRef };
  Kind kind = Kind::Atomic;
  AtomicAction atom;
  std::string practice;  // PracticeRef
  bool operator==(const StrategyAction&) const = default;
};

struct Strategy {
  std::string id;
  Condition condition;
  GroupExpr group;
  StrategyAction action;
  bool operator==(const Strategy&) const = default;
};

enum class Deontic { Obligation, Forbidden };

struct Norm {
  std::string id;
  RoleId role;
  Deontic deontic = Deontic::Obligation;
  Condition condition;
  AtomicAction action;            // role terms bind to the normed agent
  std::optional<std::string> sanction;  // parsed if present, never executed
  bool operator==(const Norm&) const = default;
};

struct RoleRequirement {
  // role == nullopt: group-level requirement checked on the common tier.
  std::optional<RoleId> role;
  std::vector<ActionSymbol> caps;
  std::vector<Fact> knows;
  bool operator==(const RoleRequirement&) const = default;
};

struct ContextDecl {
  std::string id;
  Condition when;
  bool operator==(const ContextDecl&) const = default;
};

// The full practice operator: identity, context, meaning, expectations and
// activities, one field per element of the model.
struct SocialPractice {
  std::string id;
  std::vector<RoleId> roles;                   // R
  std::vector<ResourceKind> resources;         // O + Af (kind affords actions)
  std::vector<ObjectId> places;                // Pl
  std::vector<PurposeDecl> purposes;           // P
  std::vector<PromotesRule> promotes;          // Pv
  std::vector<CountsAsRule> counts_as;         // Co
  std::optional<PlanPattern> pattern;          // PP
  std::vector<Norm> norms;                     // N
  std::vector<Strategy> strategies;            // S
  Condition start_condition;                   // Sc
  Condition end_condition;                     // D
  std::vector<PossibleActionDecl> actions;     // Ac
  std::vector<RoleRequirement> requirements;   // Re
  std::vector<ContextDecl> contexts;           // extra background contexts

  const PossibleActionDecl* find_action(const ActionSymbol& s) const;
  const ResourceKind* find_resource(const ObjectId& kind) const;
  bool has_role(const RoleId& r) const;
  bool operator==(const SocialPractice&) const = default;
};

// Deterministic filler for one abstract plan slot: repeat an action a number
// of times before the achieving action, e.g. talking through a presentation.
struct SlotFill {
  FactName landmark;
  ActionSymbol filler;
  int repeat = 0;
  bool operator==(const SlotFill&) const = default;
};

struct ScriptedAction {
  int tick = 0;
  AtomicAction action;
  bool operator==(const ScriptedAction&) const = default;
};

struct AgentDecl {
  AgentId id;
  std::vector<RoleId> plays;
  std::set<ActionSymbol> capabilities;
  std::vector<ObjectId> uses;      // preferred resource instances
  std::vector<Fact> believes;      // private beliefs at load
  bool violator = false;           // ignores norm filtering (monitor testing)
  std::vector<ScriptedAction> script;
  bool operator==(const AgentDecl&) const = default;
};

struct ResourceInstance {
  ObjectId id;
  ObjectId kind;
  bool operator==(const ResourceInstance&) const = default;
};

struct Scenario {
  std::string id;
  std::string practice;                  // id of the practice it binds
  std::map<int, int> clock;              // hour -> tick
  unsigned seed = 0;
  std::vector<ResourceInstance> resources;
  std::vector<Fact> facts;               // initial world facts
  std::vector<Fact> public_facts;        // published to the whole group
  std::vector<SlotFill> fills;
  std::vector<AgentDecl> agents;

  const AgentDecl* find_agent(const AgentId& a) const;
  const ResourceInstance* find_instance(const ObjectId& o) const;
  AgentSet all_agents() const;
  bool operator==(const Scenario&) const = default;
};

// A practice bound to a scenario: the unit the engine operates on.
struct Spec {
  SocialPractice practice;
  Scenario scenario;

  bool is_role(const std::string& s) const { return practice.has_role(s); }
  bool is_agent(const std::string& s) const { return scenario.find_agent(s) != nullptr; }
  AgentSet resolve_group(const GroupExpr& g, const WorldState& s) const;

  // Declared capability set (Cap(a, x) iff x in the result).
  const std::set<ActionSymbol>& capability_of(const AgentId& a) const;

  // Object kind of an instance id, if any.
  std::optional<ObjectId> kind_of(const ObjectId& instance) const;
};

}  // namespace sopra
