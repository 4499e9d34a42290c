#include "gfa/functions.hpp"

#include <algorithm>
#include <set>

#include "gfa/errors.hpp"

namespace gfa {

NodeFunction::NodeFunction(ScalarDomain domain, std::vector<Scalar> values)
    : domain_(domain), values_(std::move(values)) {
  for (const auto& v : values_) {
    if (!(v.domain() == domain_)) {
      throw DomainError("node function value in " + v.domain().name() + ", expected " + domain_.name());
    }
  }
}

NodeFunction NodeFunction::zeros(ScalarDomain domain, std::size_t n) {
  return NodeFunction(domain, std::vector<Scalar>(n, domain.zero()));
}

NodeFunction NodeFunction::constant(const Scalar& c, std::size_t n) {
  return NodeFunction(c.domain(), std::vector<Scalar>(n, c));
}

void NodeFunction::require_compatible(const NodeFunction& o, const char* op) const {
  if (!(domain_ == o.domain_)) throw DomainError(std::string("node function domain mismatch in ") + op);
  if (size() != o.size()) throw ContractError(std::string("node function length mismatch in ") + op);
}

NodeFunction NodeFunction::operator+(const NodeFunction& o) const {
  require_compatible(o, "+");
  NodeFunction r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

NodeFunction NodeFunction::operator-(const NodeFunction& o) const {
  require_compatible(o, "-");
  NodeFunction r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] -= o.values_[i];
  return r;
}

NodeFunction NodeFunction::operator-() const {
  NodeFunction r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

NodeFunction NodeFunction::scaled(const Scalar& s) const {
  NodeFunction r = *this;
  for (auto& v : r.values_) v = v * s;
  return r;
}

NodeFunction NodeFunction::operator*(const NodeFunction& o) const {
  require_compatible(o, "*");
  NodeFunction r = *this;
  for (std::size_t i = 0; i < size(); ++i) r.values_[i] *= o.values_[i];
  return r;
}

bool NodeFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& v) { return v.is_zero(); });
}

bool NodeFunction::operator==(const NodeFunction& o) const {
  return domain_ == o.domain_ && values_ == o.values_;
}

void EdgeFunction::set(std::size_t i, std::size_t j, Scalar v) {
  if (!(v.domain() == domain_)) throw DomainError("edge function value in wrong domain");
  values_.insert_or_assign(EdgeKey{i, j}, std::move(v));
}

Scalar EdgeFunction::get(std::size_t i, std::size_t j) const {
  const auto it = values_.find({i, j});
  return it == values_.end() ? domain_.zero() : it->second;
}

EdgeFunction EdgeFunction::operator-(const EdgeFunction& o) const {
  if (!(domain_ == o.domain_)) throw DomainError("edge function domain mismatch in -");
  EdgeFunction r = *this;
  for (const auto& [k, v] : o.values_) r.set(k.first, k.second, get(k.first, k.second) - v);
  return r;
}

bool EdgeFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool EdgeFunction::operator==(const EdgeFunction& o) const {
  if (!(domain_ == o.domain_)) return false;
  return (*this - o).is_zero();
}

Scalar inner(const NodeFunction& f, const NodeFunction& g) {
  if (!(f.domain() == g.domain())) throw DomainError("inner product domain mismatch");
  if (f.size() != g.size()) throw ContractError("inner product length mismatch");
  Scalar s = f.domain().zero();
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s;
}

Scalar inner(const EdgeFunction& f, const EdgeFunction& g) {
  if (!(f.domain() == g.domain())) throw DomainError("inner product domain mismatch");
  Scalar s = f.domain().zero();
  for (const auto& [k, v] : f.values()) s += v * g.get(k.first, k.second);
  return s;
}

}  // namespace gfa
