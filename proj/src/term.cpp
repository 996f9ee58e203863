#include "morgan/term.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace morgan {

struct TermNode {
  Op op;
  Namespace ns;
  std::string name;
  const TermNode* left;
  const TermNode* right;
  std::uint32_t id;
  std::uint32_t complexity;
  std::uint32_t size;
};

namespace {

struct NodeKey {
  Op op;
  Namespace ns;
  std::string name;
  const TermNode* left;
  const TermNode* right;

  bool operator==(const NodeKey& o) const {
    return op == o.op && ns == o.ns && left == o.left && right == o.right && name == o.name;
  }
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const noexcept {
    std::size_t h = std::hash<std::string>{}(k.name);
    h ^= (static_cast<std::size_t>(k.op) << 3) ^ static_cast<std::size_t>(k.ns);
    h = h * 1000003u ^ reinterpret_cast<std::uintptr_t>(k.left);
    h = h * 1000003u ^ reinterpret_cast<std::uintptr_t>(k.right);
    return h;
  }
};

class Interner {
 public:
  const TermNode* intern(Op op, Namespace ns, std::string_view name, const TermNode* l,
                         const TermNode* r) {
    NodeKey key{op, ns, std::string(name), l, r};
    std::lock_guard lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    std::uint32_t cx = (op == Op::var || op == Op::bottom) ? 0 : 1;
    std::uint32_t sz = 1;
    if (l) { cx += l->complexity; sz += l->size; }
    if (r) { cx += r->complexity; sz += r->size; }
    auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(TermNode{op, ns, key.name, l, r, id, cx, sz});
    const TermNode* n = &nodes_.back();
    table_.emplace(std::move(key), n);
    return n;
  }

 private:
  std::mutex mutex_;
  std::deque<TermNode> nodes_;
  std::unordered_map<NodeKey, const TermNode*, NodeKeyHash> table_;
};

Interner& interner() {
  static Interner instance;
  return instance;
}

const TermNode* bottom_node() {
  static const TermNode* n = interner().intern(Op::bottom, Namespace::base, "", nullptr, nullptr);
  return n;
}

}  // namespace

Term::Term() : node_(bottom_node()) {}

Term Term::var(std::string_view name, Namespace ns) {
  if (name.empty()) throw std::invalid_argument("variable name must be non-empty");
  return Term(interner().intern(Op::var, ns, name, nullptr, nullptr));
}

Term Term::bottom() { return Term(bottom_node()); }
Term Term::top() { return neg(bottom()); }
Term Term::neg(Term t) { return Term(interner().intern(Op::neg, Namespace::base, "", t.node_, nullptr)); }
Term Term::conj(Term l, Term r) {
  return Term(interner().intern(Op::conj, Namespace::base, "", l.node_, r.node_));
}
Term Term::disj(Term l, Term r) {
  return Term(interner().intern(Op::disj, Namespace::base, "", l.node_, r.node_));
}
Term Term::imp(Term l, Term r) {
  return Term(interner().intern(Op::imp, Namespace::base, "", l.node_, r.node_));
}
Term Term::imp_top() { return imp(bottom(), bottom()); }
Term Term::imp_neg(Term t) { return imp(t, bottom()); }

Op Term::op() const { return node_->op; }
Namespace Term::ns() const { return node_->ns; }
const std::string& Term::name() const { return node_->name; }

Term Term::arg() const {
  if (node_->op != Op::neg) throw std::logic_error("Term::arg on non-negation");
  return Term(node_->left);
}
Term Term::left() const {
  if (!node_->left || node_->op == Op::neg) throw std::logic_error("Term::left on non-binary term");
  return Term(node_->left);
}
Term Term::right() const {
  if (!node_->right) throw std::logic_error("Term::right on non-binary term");
  return Term(node_->right);
}

std::size_t Term::complexity() const { return node_->complexity; }
std::size_t Term::size() const { return node_->size; }
std::uint32_t Term::id() const { return node_->id; }

namespace {

int compare_nodes(const TermNode* a, const TermNode* b) {
  while (true) {
    if (a == b) return 0;
    if (a->op != b->op) return a->op < b->op ? -1 : 1;
    switch (a->op) {
      case Op::var:
        if (a->ns != b->ns) return a->ns < b->ns ? -1 : 1;
        if (a->name != b->name) return a->name < b->name ? -1 : 1;
        return 0;
      case Op::bottom:
        return 0;
      case Op::neg:
        a = a->left;
        b = b->left;
        continue;
      default:
        if (int c = compare_nodes(a->left, b->left); c != 0) return c;
        a = a->right;
        b = b->right;
        continue;
    }
  }
}

}  // namespace

int compare(const Term& a, const Term& b) { return compare_nodes(a.node(), b.node()); }

void collect_vars(const Term& t, VarSet& out) {
  switch (t.op()) {
    case Op::var: out.insert(t); return;
    case Op::bottom: return;
    case Op::neg: collect_vars(t.arg(), out); return;
    default:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
  }
}

VarSet vars(const Term& t) {
  VarSet out;
  collect_vars(t, out);
  return out;
}

}  // namespace morgan
