#include "symcert/branch_bound.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace symcert {

std::string to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified";
    case CertStatus::Inconclusive: return "inconclusive";
    case CertStatus::InfeasibleDomain: return "infeasible-domain";
    case CertStatus::Refuted: return "refuted";
  }
  return "unknown";
}

std::string to_string(LeafKind k) {
  switch (k) {
    case LeafKind::Bound: return "bound";
    case LeafKind::Infeasible: return "infeasible";
    case LeafKind::Open: return "open";
    case LeafKind::Pending: return "pending";
  }
  return "unknown";
}

namespace {

CertStatus parse_status(const std::string& s) {
  for (auto st : {CertStatus::Certified, CertStatus::Inconclusive, CertStatus::InfeasibleDomain, CertStatus::Refuted})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown certificate status '" + s + "'");
}

LeafKind parse_kind(const std::string& s) {
  for (auto k : {LeafKind::Bound, LeafKind::Infeasible, LeafKind::Open, LeafKind::Pending})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown leaf kind '" + s + "'");
}

/// Constraint test shared by the search and the replay.
bool excludes(const Interval& range, Relation rel) {
  return rel == Relation::EqualsZero ? !range.contains(Rational(0)) : range.lo() > 0;
}

struct Node {
  Box box;
  std::string path;
  std::optional<Interval> inherited;
};

enum class Decision { Bound, Infeasible, Open, Split };

struct Outcome {
  Decision decision = Decision::Split;
  Interval enclosure;
  int constraint_index = -1;
  std::optional<std::vector<Rational>> feasible_midpoint;
  Rational midpoint_value;
};

class Evaluator {
 public:
  explicit Evaluator(const Problem& pr) : problem_(pr), objective_(pr.objective, static_cast<int>(pr.domain.size())) {
    for (const auto& c : pr.constraints) constraints_.emplace_back(c.g, static_cast<int>(pr.domain.size()));
  }

  Outcome evaluate(const Node& node, int depth, int max_depth) const {
    Outcome out;
    for (std::size_t j = 0; j < constraints_.size(); ++j) {
      if (excludes(constraints_[j](node.box), problem_.constraints[j].relation)) {
        out.decision = Decision::Infeasible;
        out.constraint_index = static_cast<int>(j);
        return out;
      }
    }
    out.enclosure = objective_(node.box);
    if (node.inherited) out.enclosure = intersect(out.enclosure, *node.inherited);

    std::vector<Rational> mid(node.box.size());
    for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = node.box[i].midpoint();
    bool feasible = true;
    for (const auto& c : problem_.constraints) {
      Rational v = c.g.eval(mid);
      feasible = feasible && (c.relation == Relation::EqualsZero ? v == 0 : v <= 0);
      if (!feasible) break;
    }
    if (feasible) {
      out.midpoint_value = problem_.objective.eval(mid);
      out.feasible_midpoint = std::move(mid);
    }

    if (out.enclosure.lo() >= problem_.target)
      out.decision = Decision::Bound;
    else if (depth >= max_depth)
      out.decision = Decision::Open;
    return out;
  }

 private:
  const Problem& problem_;
  Enclosure objective_;
  std::vector<Enclosure> constraints_;
};

std::vector<Outcome> evaluate_level(const Evaluator& ev, const std::vector<Node>& level, std::size_t count, int depth,
                                    int max_depth, unsigned workers) {
  std::vector<Outcome> out(count);
  auto run = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < count; i += stride) out[i] = ev.evaluate(level[i], depth, max_depth);
  };
  unsigned n = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (n == 1) {
    run(0, 1);
    return out;
  }
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < n; ++w) pool.emplace_back(run, w, n);
  for (auto& t : pool) t.join();
  return out;
}

void validate(const Problem& pr) {
  if (pr.domain.empty() || pr.domain.size() > static_cast<std::size_t>(kVars))
    throw std::invalid_argument("domain must have 1..6 dimensions");
  auto dims = static_cast<int>(pr.domain.size());
  if (pr.objective.used_vars() > dims) throw std::invalid_argument("objective uses more variables than the domain");
  for (const auto& c : pr.constraints)
    if (c.g.used_vars() > dims) throw std::invalid_argument("constraint uses more variables than the domain");
}

}  // namespace

std::size_t split_dimension(const Box& box) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < box.size(); ++i)
    if (box[i].width() > box[best].width()) best = i;
  return best;
}

std::pair<Box, Box> bisect(const Box& box) {
  std::size_t d = split_dimension(box);
  Rational mid = box[d].midpoint();
  Box lower = box, upper = box;
  lower[d] = Interval(box[d].lo(), mid);
  upper[d] = Interval(mid, box[d].hi());
  return {std::move(lower), std::move(upper)};
}

CertificateResult bb_lower_bound(const Problem& problem, const Budget& budget, unsigned workers) {
  validate(problem);
  if (budget.max_boxes == 0 || budget.max_depth < 0) throw std::invalid_argument("budget must allow at least one box");
  Evaluator ev(problem);
  CertificateResult res;

  auto pending_leaf = [&](Node&& n) {
    res.leaves.push_back({std::move(n.path), std::move(n.box), LeafKind::Pending, *n.inherited, -1});
  };

  std::vector<Node> level{{problem.domain, "", std::nullopt}};
  for (int depth = 0; !level.empty(); ++depth) {
    std::size_t allowed = std::min(level.size(), budget.max_boxes - res.boxes_processed);
    auto outcomes = evaluate_level(ev, level, allowed, depth, budget.max_depth, workers);
    res.boxes_processed += allowed;
    if (allowed > 0) res.max_depth_reached = depth;

    std::vector<Node> next;
    for (std::size_t i = 0; i < allowed; ++i) {
      Node& node = level[i];
      Outcome& oc = outcomes[i];
      if (oc.feasible_midpoint) {
        if (!res.best_feasible_value || oc.midpoint_value < *res.best_feasible_value)
          res.best_feasible_value = oc.midpoint_value;
        if (!res.witness && oc.midpoint_value < problem.target) {
          res.witness = oc.feasible_midpoint;
          res.witness_value = oc.midpoint_value;
        }
      }
      switch (oc.decision) {
        case Decision::Infeasible:
          res.leaves.push_back({std::move(node.path), std::move(node.box), LeafKind::Infeasible, Interval(), oc.constraint_index});
          break;
        case Decision::Bound:
          res.leaves.push_back({std::move(node.path), std::move(node.box), LeafKind::Bound, oc.enclosure, -1});
          break;
        case Decision::Open:
          res.leaves.push_back({std::move(node.path), std::move(node.box), LeafKind::Open, oc.enclosure, -1});
          break;
        case Decision::Split: {
          auto [lower, upper] = bisect(node.box);
          next.push_back({std::move(lower), node.path + "0", oc.enclosure});
          next.push_back({std::move(upper), node.path + "1", oc.enclosure});
          break;
        }
      }
    }
    bool stop = res.witness.has_value() || allowed < level.size();
    for (std::size_t i = allowed; i < level.size(); ++i) pending_leaf(std::move(level[i]));
    if (stop) {
      for (auto& n : next) pending_leaf(std::move(n));
      break;
    }
    level = std::move(next);
  }

  bool unresolved = false, any_bound = false;
  std::optional<Rational> min_lo;
  for (const auto& leaf : res.leaves) {
    if (leaf.kind == LeafKind::Infeasible) continue;
    if (leaf.kind == LeafKind::Bound)
      any_bound = true;
    else
      unresolved = true;
    if (!min_lo || leaf.enclosure.lo() < *min_lo) min_lo = leaf.enclosure.lo();
  }
  res.certified_lower_bound = min_lo ? *min_lo : problem.target;
  res.budget_exhausted = unresolved && !res.witness;
  if (res.witness)
    res.status = CertStatus::Refuted;
  else if (unresolved)
    res.status = CertStatus::Inconclusive;
  else if (!any_bound)
    res.status = CertStatus::InfeasibleDomain;
  else
    res.status = CertStatus::Certified;
  return res;
}

void write_certificate(std::ostream& out, const Problem& problem, const CertificateResult& result) {
  out << "symcert-certificate v1\n";
  out << "dims " << problem.domain.size() << "\n";
  out << "objective " << problem.objective.to_string() << "\n";
  out << "constraints " << problem.constraints.size() << "\n";
  for (const auto& c : problem.constraints)
    out << "constraint " << (c.relation == Relation::EqualsZero ? "eq" : "le") << " " << c.g.to_string() << "\n";
  out << "domain " << box_to_string(problem.domain) << "\n";
  out << "target " << to_string(problem.target) << "\n";
  out << "status " << to_string(result.status) << "\n";
  out << "bound " << to_string(result.certified_lower_bound) << "\n";
  out << "boxes_processed " << result.boxes_processed << "\n";
  out << "max_depth_reached " << result.max_depth_reached << "\n";
  if (result.witness) {
    out << "witness";
    for (const auto& v : *result.witness) out << " " << to_string(v);
    out << "\n";
  }
  out << "leaves " << result.leaves.size() << "\n";
  for (const auto& leaf : result.leaves) {
    out << "leaf " << (leaf.path.empty() ? "-" : leaf.path) << " " << to_string(leaf.kind) << " ";
    if (leaf.kind == LeafKind::Infeasible)
      out << leaf.constraint_index;
    else
      out << leaf.enclosure.to_string();
    out << " " << box_to_string(leaf.box) << "\n";
  }
  out << "end\n";
}

namespace {

std::string rest_after(const std::string& line, const std::string& key) {
  if (line.rfind(key + " ", 0) != 0) throw std::invalid_argument("certificate: expected '" + key + "'");
  return line.substr(key.size() + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

Box parse_box(const std::vector<std::string>& toks, std::size_t from) {
  Box b;
  for (std::size_t i = from; i < toks.size(); ++i) b.push_back(Interval::parse(toks[i]));
  return b;
}

}  // namespace

static ReplayResult replay_strict(std::istream& in) {
  ReplayResult rr;
  auto next_line = [&]() {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("certificate: unexpected end of input");
    return line;
  };
  if (next_line() != "symcert-certificate v1") throw std::invalid_argument("certificate: bad header");
  Problem pr;
  auto dims = std::stoul(rest_after(next_line(), "dims"));
  pr.objective = Polynomial::parse(rest_after(next_line(), "objective"));
  auto ncons = std::stoul(rest_after(next_line(), "constraints"));
  for (std::size_t j = 0; j < ncons; ++j) {
    auto toks = rest_after(next_line(), "constraint");
    auto sp = toks.find(' ');
    std::string rel = toks.substr(0, sp);
    if (rel != "eq" && rel != "le") throw std::invalid_argument("certificate: bad relation");
    pr.constraints.push_back({Polynomial::parse(toks.substr(sp + 1)), rel == "eq" ? Relation::EqualsZero : Relation::AtMostZero});
  }
  pr.domain = parse_box(split_ws(rest_after(next_line(), "domain")), 0);
  if (pr.domain.size() != dims) throw std::invalid_argument("certificate: domain dimension mismatch");
  validate(pr);
  pr.target = parse_rational(rest_after(next_line(), "target"));
  rr.claimed_status = parse_status(rest_after(next_line(), "status"));
  rr.claimed_bound = parse_rational(rest_after(next_line(), "bound"));
  next_line();  // boxes_processed
  next_line();  // max_depth_reached
  std::string line = next_line();
  std::optional<std::vector<Rational>> witness;
  if (line.rfind("witness", 0) == 0) {
    witness.emplace();
    for (const auto& t : split_ws(rest_after(line, "witness"))) witness->push_back(parse_rational(t));
    line = next_line();
  }
  auto nleaves = std::stoul(rest_after(line, "leaves"));
  std::vector<LeafRecord> leaves;
  leaves.reserve(nleaves);
  for (std::size_t i = 0; i < nleaves; ++i) {
    auto toks = split_ws(rest_after(next_line(), "leaf"));
    if (toks.size() != 3 + dims) throw std::invalid_argument("certificate: malformed leaf line");
    LeafRecord leaf;
    leaf.path = toks[0] == "-" ? "" : toks[0];
    leaf.kind = parse_kind(toks[1]);
    if (leaf.kind == LeafKind::Infeasible)
      leaf.constraint_index = std::stoi(toks[2]);
    else
      leaf.enclosure = Interval::parse(toks[2]);
    leaf.box = parse_box(toks, 3);
    leaves.push_back(std::move(leaf));
  }
  if (next_line() != "end") throw std::invalid_argument("certificate: missing 'end'");

  auto fail = [&](const std::string& msg) {
    ++rr.discrepancies;
    if (rr.messages.size() < 20) rr.messages.push_back(msg);
  };

  // Coverage: paths are binary, prefix-free, and their Kraft sum is exactly 1,
  // so the leaves are the leaves of a complete bisection tree of the domain.
  std::set<std::string> paths;
  Rational kraft = 0;
  bool paths_ok = true;
  for (const auto& leaf : leaves) {
    if (leaf.path.find_first_not_of("01") != std::string::npos || !paths.insert(leaf.path).second) paths_ok = false;
    Rational w(1);
    mpz_mul_2exp(w.get_den_mpz_t(), w.get_den_mpz_t(), leaf.path.size());
    kraft += w;
  }
  for (const auto& p : paths)
    for (std::size_t len = 0; len < p.size() && paths_ok; ++len)
      if (paths.count(p.substr(0, len))) paths_ok = false;
  rr.coverage_ok = paths_ok && kraft == 1 && !leaves.empty();
  if (!rr.coverage_ok) fail("leaf paths do not tile the domain");

  Enclosure objective(pr.objective, static_cast<int>(dims));
  std::vector<Enclosure> cons;
  for (const auto& c : pr.constraints) cons.emplace_back(c.g, static_cast<int>(dims));

  std::map<std::string, Box> boxes{{"", pr.domain}};
  std::map<std::string, Interval> effective;
  std::function<const Box&(const std::string&)> box_of = [&](const std::string& path) -> const Box& {
    auto it = boxes.find(path);
    if (it != boxes.end()) return it->second;
    const Box& parent = box_of(path.substr(0, path.size() - 1));
    auto [lower, upper] = bisect(parent);
    return boxes.emplace(path, path.back() == '0' ? lower : upper).first->second;
  };
  std::function<const Interval&(const std::string&)> enclosure_of = [&](const std::string& path) -> const Interval& {
    auto it = effective.find(path);
    if (it != effective.end()) return it->second;
    Interval own = objective(box_of(path));
    if (!path.empty()) own = intersect(own, enclosure_of(path.substr(0, path.size() - 1)));
    return effective.emplace(path, own).first->second;
  };

  bool unresolved = false, any_bound = false;
  std::optional<Rational> min_lo;
  for (const auto& leaf : leaves) {
    ++rr.leaves_checked;
    const std::string label = "leaf '" + leaf.path + "'";
    if (!paths_ok) break;
    if (box_of(leaf.path) != leaf.box) {
      fail(label + ": box does not match its bisection path");
      continue;
    }
    switch (leaf.kind) {
      case LeafKind::Infeasible: {
        auto j = leaf.constraint_index;
        if (j < 0 || static_cast<std::size_t>(j) >= cons.size() ||
            !excludes(cons[static_cast<std::size_t>(j)](leaf.box), pr.constraints[static_cast<std::size_t>(j)].relation))
          fail(label + ": infeasibility not confirmed");
        continue;
      }
      case LeafKind::Bound:
      case LeafKind::Open:
        if (enclosure_of(leaf.path) != leaf.enclosure) fail(label + ": enclosure mismatch");
        if (leaf.kind == LeafKind::Bound && leaf.enclosure.lo() < pr.target) fail(label + ": bound leaf below target");
        break;
      case LeafKind::Pending:
        if (leaf.path.empty() || enclosure_of(leaf.path.substr(0, leaf.path.size() - 1)) != leaf.enclosure)
          fail(label + ": pending enclosure mismatch");
        break;
    }
    if (leaf.kind == LeafKind::Bound)
      any_bound = true;
    else
      unresolved = true;
    if (!min_lo || leaf.enclosure.lo() < *min_lo) min_lo = leaf.enclosure.lo();
  }
  rr.recomputed_bound = min_lo;
  Rational expected_bound = min_lo ? *min_lo : pr.target;
  if (expected_bound != rr.claimed_bound) fail("claimed bound does not equal the minimum leaf lower bound");

  switch (rr.claimed_status) {
    case CertStatus::Certified:
      if (unresolved || !any_bound || rr.claimed_bound < pr.target) fail("certified status not supported by the leaves");
      break;
    case CertStatus::InfeasibleDomain:
      if (unresolved || any_bound) fail("infeasible-domain status not supported by the leaves");
      break;
    case CertStatus::Inconclusive:
      if (!unresolved) fail("inconclusive status but every leaf is resolved");
      break;
    case CertStatus::Refuted: {
      bool ok = witness && witness->size() == dims;
      if (ok) {
        for (const auto& c : pr.constraints) {
          Rational v = c.g.eval(*witness);
          ok = ok && (c.relation == Relation::EqualsZero ? v == 0 : v <= 0);
        }
        ok = ok && pr.objective.eval(*witness) < pr.target;
      }
      if (!ok) fail("refutation witness not confirmed");
      break;
    }
  }
  return rr;
}

GridResult grid_oracle_min(const Polynomial& p, const Box& box, const ConstraintSpec& cons, const Rational& step) {
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  const std::size_t n = box.size();
  if (p.used_vars() > static_cast<int>(n)) throw std::invalid_argument("objective uses more variables than the box");

  std::vector<Rational> tol(cons.size());
  for (std::size_t j = 0; j < cons.size(); ++j) {
    if (cons[j].relation != Relation::EqualsZero) continue;
    Rational slope = 0;
    for (std::size_t i = 0; i < n; ++i) slope += poly_range(cons[j].g.diff(static_cast<int>(i)), box).mag();
    tol[j] = step * slope;
  }

  std::vector<long> counts(n), idx(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Rational q = box[i].width() / step;
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    counts[i] = f.get_si() + 1;
  }

  GridResult res;
  std::vector<Rational> pt(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) pt[i] = box[i].lo() + step * idx[i];
    ++res.nodes_scanned;
    bool feasible = true;
    for (std::size_t j = 0; j < cons.size() && feasible; ++j) {
      Rational v = cons[j].g.eval(pt);
      feasible = cons[j].relation == Relation::EqualsZero ? abs(v) <= tol[j] : v <= 0;
    }
    if (feasible) {
      ++res.feasible_nodes;
      Rational v = p.eval(pt);
      if (!res.value || v < *res.value) {
        res.value = v;
        res.point = pt;
      }
    }
    std::size_t d = n;
    while (d > 0) {
      --d;
      if (++idx[d] < counts[d]) break;
      idx[d] = 0;
      if (d == 0) return res;
    }
    if (n == 0) return res;
  }
}

ReplayResult replay_certificate(std::istream& in) {
  try {
    return replay_strict(in);
  } catch (const std::exception& e) {
    ReplayResult rr;
    rr.discrepancies = 1;
    rr.messages.push_back(std::string("malformed certificate: ") + e.what());
    return rr;
  }
}

}  // namespace symcert
