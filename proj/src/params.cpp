#include "mm/params.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mm {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int e : entries_) {
        if (e < 0) throw std::invalid_argument("multi-index entries must be non-negative");
    }
}

MultiIndex MultiIndex::unit(std::size_t r, std::size_t i)
{
    MultiIndex m(r);
    m.entries_.at(i) = 1;
    return m;
}

int MultiIndex::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

MultiIndex MultiIndex::raised(std::size_t k) const
{
    MultiIndex m = *this;
    ++m.entries_.at(k);
    return m;
}

MultiIndex MultiIndex::lowered(std::size_t k) const
{
    if (entries_.at(k) == 0) throw std::invalid_argument("cannot lower a zero coordinate");
    MultiIndex m = *this;
    --m.entries_[k];
    return m;
}

Rational MultiIndex::factorial() const
{
    Rational f(1);
    for (int e : entries_) f *= mm::factorial(static_cast<unsigned>(e));
    return f;
}

std::string MultiIndex::str() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < entries_.size(); ++k) os << (k ? "," : "") << entries_[k];
    return os.str();
}

namespace {

void emit_degree(std::size_t r, int remaining, std::size_t k, std::vector<int>& cur, std::vector<MultiIndex>& out)
{
    if (k + 1 == r) {
        cur[k] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[k] = e;
        emit_degree(r, remaining - e, k + 1, cur, out);
    }
}

}  // namespace

std::vector<MultiIndex> indices_of_degree(std::size_t r, int total)
{
    if (r == 0) throw std::invalid_argument("multi-index length must be positive");
    std::vector<MultiIndex> out;
    if (total < 0) return out;
    std::vector<int> cur(r, 0);
    emit_degree(r, total, 0, cur, out);
    return out;
}

std::vector<MultiIndex> indices_up_to(std::size_t r, int max_total)
{
    std::vector<MultiIndex> out;
    for (int d = 0; d <= max_total; ++d) {
        auto level = indices_of_degree(r, d);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Params::Params(Rational beta, std::vector<Rational> c) : beta_(std::move(beta)), c_(std::move(c))
{
    if (c_.empty()) throw std::invalid_argument("r must be positive");
    if (beta_.sign() <= 0) throw std::invalid_argument("beta must be > 0 (got " + beta_.str() + ")");
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].sign() <= 0 || c_[i] >= Rational(1))
            throw std::invalid_argument("c_" + std::to_string(i + 1) + " must lie in (0,1) (got " + c_[i].str() + ")");
        for (std::size_t j = 0; j < i; ++j) {
            if (c_[i] == c_[j])
                throw std::invalid_argument("c_" + std::to_string(j + 1) + " and c_" + std::to_string(i + 1) +
                                            " must differ (both " + c_[i].str() + ")");
        }
    }
}

Params Params::with_beta(const Rational& beta) const
{
    Params p(beta, c_);
    p.fault_ = fault_;
    return p;
}

Params Params::permuted(const std::vector<std::size_t>& perm) const
{
    if (perm.size() != c_.size()) throw std::invalid_argument("permutation length must equal r");
    std::vector<Rational> c;
    c.reserve(perm.size());
    for (std::size_t k : perm) c.push_back(c_.at(k));
    Params p(beta_, std::move(c));
    p.fault_ = fault_;
    return p;
}

Params Params::with_recurrence_fault(const Rational& offset) const
{
    Params p = *this;
    p.fault_ = offset;
    return p;
}

std::string Params::str() const
{
    std::ostringstream os;
    os << "r=" << r() << " beta=" << beta_ << " c=(";
    for (std::size_t k = 0; k < c_.size(); ++k) os << (k ? "," : "") << c_[k];
    os << ")";
    return os.str();
}

}  // namespace mm
