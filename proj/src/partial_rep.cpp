#include "hopfpar/partial_rep.hpp"

#include "hopfpar/pipe.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace hopfpar {

std::string word_to_string(const Word& w, const HopfAlgebra& h)
{
    if (w.empty())
        return "1";
    std::string s;
    for (auto l : w)
        s += "[" + h.label(l) + "]";
    return s;
}

namespace {

LinearMap pi_product3(Pipe p, const LinearMap& pi, const Algebra& b)
{
    p.map(0, pi).map(1, pi).map(2, pi).merge(1, b.mult).merge(0, b.mult);
    return p.value();
}

LinearMap pi_product2(Pipe p, const LinearMap& pi, const Algebra& b)
{
    p.map(0, pi).map(1, pi).merge(0, b.mult);
    return p.value();
}

}  // namespace

VerificationReport check_partial_rep(const HopfAlgebra& h, const Algebra& b, const LinearMap& pi)
{
    VerificationReport r;
    r.subject = "partial representation " + h.name + " -> End";
    std::size_t d = h.dim();
    if (pi.cols() != d || pi.rows() != b.dim)
        throw DimensionError("partial representation: pi must be dim(B) x dim(H)");

    r.expect_equal("PR1", pi * h.alg.unit_map(), b.unit_map(), {1});

    const LinearMap& m = h.m();
    const LinearMap& dl = h.delta();
    const LinearMap& s = h.S();
    std::vector<std::size_t> hh{d, d};

    {   // π(h)π(k1)π(Sk2) = π(hk1)π(Sk2)
        Pipe base(hh);
        base.split(1, dl).map(2, s);
        LinearMap lhs = pi_product3(base, pi, b);
        Pipe rhs = base;
        rhs.merge(0, m);
        r.expect_equal("PR2", lhs, pi_product2(rhs, pi, b), hh);
    }
    {   // π(h1)π(Sh2)π(k) = π(h1)π(S(h2)k)
        Pipe base(hh);
        base.split(0, dl).map(1, s);
        LinearMap lhs = pi_product3(base, pi, b);
        Pipe rhs = base;
        rhs.merge(1, m);
        r.expect_equal("PR3", lhs, pi_product2(rhs, pi, b), hh);
    }
    {   // π(h)π(Sk1)π(k2) = π(hSk1)π(k2)
        Pipe base(hh);
        base.split(1, dl).map(1, s);
        LinearMap lhs = pi_product3(base, pi, b);
        Pipe rhs = base;
        rhs.merge(0, m);
        r.expect_equal("PR4", lhs, pi_product2(rhs, pi, b), hh);
    }
    {   // π(Sh1)π(h2)π(k) = π(Sh1)π(h2k)
        Pipe base(hh);
        base.split(0, dl).map(0, s);
        LinearMap lhs = pi_product3(base, pi, b);
        Pipe rhs = base;
        rhs.merge(1, m);
        r.expect_equal("PR5", lhs, pi_product2(rhs, pi, b), hh);
    }
    bool left = r.passed("PR1") && r.passed("PR2") && r.passed("PR3");
    bool right = r.passed("PR1") && r.passed("PR4") && r.passed("PR5");
    r.expect("PR123 <=> PR145", left == right,
             left ? "both triples hold" : (right ? "only PR1,PR4,PR5 hold" : "neither triple holds"));
    return r;
}

std::optional<std::size_t> env_budget()
{
    const char* v = std::getenv("HOPFPAR_BUDGET");
    if (!v || !*v)
        return std::nullopt;
    char* end = nullptr;
    unsigned long n = std::strtoul(v, &end, 10);
    if (end == v)
        return std::nullopt;
    return static_cast<std::size_t>(n);
}

namespace {

// Words over d letters, indexed by (length, lex): index = offset(len) + base-d value.
struct WordIndex {
    std::size_t d = 0;
    std::vector<std::uint64_t> offset;   // offset[l] = number of words of length < l
    std::vector<std::uint64_t> power;

    WordIndex(std::size_t letters, std::size_t max_len) : d(letters)
    {
        offset.assign(max_len + 2, 0);
        power.assign(max_len + 2, 1);
        for (std::size_t l = 1; l <= max_len + 1; ++l) {
            power[l] = power[l - 1] * d;
            offset[l] = offset[l - 1] + power[l - 1];
        }
    }
    std::uint64_t count_upto(std::size_t len) const { return offset[len + 1]; }
    std::size_t length(std::uint64_t idx) const
    {
        std::size_t l = 0;
        while (offset[l + 1] <= idx)
            ++l;
        return l;
    }
    std::uint64_t value(const Word& w) const
    {
        std::uint64_t v = 0;
        for (auto c : w)
            v = v * d + c;
        return v;
    }
    std::uint64_t index(const Word& w) const { return offset[w.size()] + value(w); }
    Word word(std::uint64_t idx) const
    {
        std::size_t l = length(idx);
        std::uint64_t v = idx - offset[l];
        Word w(l);
        for (std::size_t i = l; i-- > 0;) {
            w[i] = static_cast<std::uint32_t>(v % d);
            v /= d;
        }
        return w;
    }
};

struct SparseRow {
    std::vector<std::uint32_t> idx;   // descending
    std::vector<Scalar> val;
};

struct TermWord {
    Word w;
    Scalar c;
};

// Echelon form over word indices; the leading term of a row is its largest index.
class Eliminator {
public:
    explicit Eliminator(std::size_t total) : pivot_(total, -1), acc_(total), mark_(total, 0) {}

    std::size_t pivots() const { return rows_.size(); }
    bool is_pivot(std::uint32_t i) const { return pivot_[i] >= 0; }
    std::size_t pivots_below(std::uint64_t bound) const
    {
        std::size_t n = 0;
        for (const auto& r : rows_)
            if (r.idx[0] < bound)
                ++n;
        return n;
    }

    // Top-reduce and insert; false if the row reduced to zero.
    bool insert(const SparseRow& row)
    {
        load(row);
        while (!heap_.empty()) {
            std::uint32_t i = pop();
            if (sgn(acc_[i]) == 0)
                continue;
            if (pivot_[i] >= 0) {
                subtract(i);
                continue;
            }
            SparseRow nr;
            Scalar inv = 1 / acc_[i];
            nr.idx.push_back(i);
            nr.val.push_back(1);
            acc_[i] = 0;
            while (!heap_.empty()) {
                std::uint32_t j = pop();
                if (sgn(acc_[j]) == 0)
                    continue;
                nr.idx.push_back(j);
                nr.val.push_back(acc_[j] * inv);
                acc_[j] = 0;
            }
            pivot_[i] = static_cast<std::int32_t>(rows_.size());
            rows_.push_back(std::move(nr));
            return true;
        }
        return false;
    }

    // Full reduction; the result is supported on non-pivot words.
    std::vector<std::pair<std::uint32_t, Scalar>> normal_form(const SparseRow& row)
    {
        std::vector<std::pair<std::uint32_t, Scalar>> out;
        load(row);
        while (!heap_.empty()) {
            std::uint32_t i = pop();
            if (sgn(acc_[i]) == 0)
                continue;
            if (pivot_[i] >= 0) {
                subtract(i);
                continue;
            }
            out.emplace_back(i, acc_[i]);
            acc_[i] = 0;
        }
        return out;
    }

private:
    void load(const SparseRow& row)
    {
        for (std::size_t t = 0; t < row.idx.size(); ++t) {
            std::uint32_t i = row.idx[t];
            acc_[i] += row.val[t];
            touch(i);
        }
    }
    void touch(std::uint32_t i)
    {
        if (!mark_[i]) {
            mark_[i] = 1;
            heap_.push(i);
        }
    }
    std::uint32_t pop()
    {
        std::uint32_t i = heap_.top();
        heap_.pop();
        mark_[i] = 0;
        return i;
    }
    void subtract(std::uint32_t i)
    {
        const SparseRow& p = rows_[pivot_[i]];
        Scalar c = acc_[i];
        acc_[i] = 0;
        for (std::size_t t = 1; t < p.idx.size(); ++t) {
            std::uint32_t j = p.idx[t];
            acc_[j] -= c * p.val[t];
            touch(j);
        }
    }

    std::vector<std::int32_t> pivot_;
    std::vector<SparseRow> rows_;
    std::vector<Scalar> acc_;
    std::vector<char> mark_;
    std::priority_queue<std::uint32_t> heap_;
};

SparseRow make_row(const WordIndex& wi, const std::vector<TermWord>& terms)
{
    std::unordered_map<std::uint64_t, Scalar> m;
    for (const auto& t : terms)
        m[wi.index(t.w)] += t.c;
    SparseRow r;
    std::vector<std::pair<std::uint64_t, Scalar>> v;
    for (auto& [k, c] : m)
        if (sgn(c) != 0)
            v.emplace_back(k, c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    for (auto& [k, c] : v) {
        r.idx.push_back(static_cast<std::uint32_t>(k));
        r.val.push_back(c);
    }
    return r;
}

// Relations (2) and (3) of the ideal defining H_par, as combinations of
// words of length 3 and 2 over the letters of H.
std::vector<std::vector<TermWord>> raw_generators(const HopfAlgebra& h)
{
    std::size_t d = h.dim();
    std::vector<std::vector<TermWord>> gens;
    // k1 ⊗ S(k2) as (a, c, coef)
    auto delta_s = [&](std::size_t k) {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> out;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& cab = h.delta()(a * d + b, k);
                if (sgn(cab) == 0)
                    continue;
                for (std::size_t c = 0; c < d; ++c) {
                    const Scalar& s = h.S()(c, b);
                    if (sgn(s) != 0)
                        out.emplace_back(a, c, cab * s);
                }
            }
        return out;
    };
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t k = 0; k < d; ++k) {
            auto u = static_cast<std::uint32_t>(x);
            auto v = static_cast<std::uint32_t>(k);
            // [h][k1][Sk2] - [hk1][Sk2]
            std::vector<TermWord> g2;
            for (auto& [a, c, coef] : delta_s(k)) {
                g2.push_back({Word{u, a, c}, coef});
                for (std::size_t f = 0; f < d; ++f) {
                    const Scalar& mf = h.m()(f, x * d + a);
                    if (sgn(mf) != 0)
                        g2.push_back({Word{static_cast<std::uint32_t>(f), c}, -coef * mf});
                }
            }
            gens.push_back(g2);
            // [h1][Sh2][k] - [h1][S(h2)k]
            std::vector<TermWord> g3;
            for (auto& [a, c, coef] : delta_s(x)) {
                g3.push_back({Word{a, c, v}, coef});
                for (std::size_t f = 0; f < d; ++f) {
                    const Scalar& mf = h.m()(f, c * d + k);
                    if (sgn(mf) != 0)
                        g3.push_back({Word{a, static_cast<std::uint32_t>(f)}, -coef * mf});
                }
            }
            gens.push_back(g3);
        }
    return gens;
}

// The relation [1_H] = 1 is used to eliminate one letter e_j (the last one with
// a nonzero unit coefficient): e_j = (1 - Σ_{i≠j} u_i e_i) / u_j. Words are then
// taken over the remaining letters, renumbered in order.
struct LetterElimination {
    std::size_t d = 0;
    std::uint32_t elim = 0;
    std::vector<std::int64_t> to_new;      // -1 for the eliminated letter
    std::vector<std::uint32_t> to_old;
    Vec unit;

    explicit LetterElimination(const HopfAlgebra& h) : d(h.dim()), unit(h.one())
    {
        for (std::size_t k = 0; k < d; ++k)
            if (sgn(unit[k]) != 0)
                elim = static_cast<std::uint32_t>(k);
        to_new.assign(d, -1);
        for (std::uint32_t k = 0; k < d; ++k)
            if (k != elim) {
                to_new[k] = static_cast<std::int64_t>(to_old.size());
                to_old.push_back(k);
            }
    }
    std::size_t letters() const { return to_old.size(); }

    std::vector<TermWord> substitute(const std::vector<TermWord>& terms) const
    {
        std::vector<TermWord> out;
        for (const auto& t : terms) {
            std::vector<TermWord> part{{Word{}, t.c}};
            for (auto l : t.w) {
                std::vector<TermWord> next;
                for (auto& p : part) {
                    if (l != elim) {
                        p.w.push_back(static_cast<std::uint32_t>(to_new[l]));
                        next.push_back(std::move(p));
                        continue;
                    }
                    next.push_back({p.w, p.c / unit[elim]});
                    for (std::uint32_t i = 0; i < d; ++i)
                        if (i != elim && sgn(unit[i]) != 0) {
                            Word w = p.w;
                            w.push_back(static_cast<std::uint32_t>(to_new[i]));
                            next.push_back({std::move(w), -p.c * unit[i] / unit[elim]});
                        }
                }
                part = std::move(next);
            }
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    Word to_original(const Word& w) const
    {
        Word o;
        for (auto l : w)
            o.push_back(to_old[l]);
        return o;
    }
};

struct Generator {
    std::vector<TermWord> terms;
    std::size_t degree = 0;
};

// Independent generators, each of minimal degree (echelon on reversed word order).
std::vector<Generator> reduce_generators(const std::vector<std::vector<TermWord>>& raw, std::size_t letters)
{
    WordIndex wi(letters, 3);
    std::size_t total = wi.count_upto(3);
    std::vector<Vec> rows;
    for (const auto& g : raw) {
        Vec v(total);
        for (const auto& t : g)
            v[total - 1 - wi.index(t.w)] += t.c;
        rows.push_back(v);
    }
    rref(rows, total);
    std::vector<Generator> out;
    for (const auto& v : rows) {
        if (is_zero(v))
            continue;
        Generator g;
        for (std::size_t i = 0; i < total; ++i)
            if (sgn(v[i]) != 0) {
                Word w = wi.word(total - 1 - i);
                g.degree = std::max(g.degree, w.size());
                g.terms.push_back({w, v[i]});
            }
        out.push_back(std::move(g));
    }
    return out;
}

// All words of exactly the given length.
std::vector<Word> words_of_length(std::size_t d, std::size_t len)
{
    std::vector<Word> out;
    if (d == 0 && len > 0)
        return out;
    Word w(len, 0);
    while (true) {
        out.push_back(w);
        std::size_t i = len;
        while (i > 0) {
            if (++w[i - 1] < d)
                break;
            w[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
    }
    return out;
}

// Padded rows a·g·b with |a|+|b| = pad exactly.
void padded_rows(const WordIndex& wi, const Generator& g, std::size_t pad, std::vector<SparseRow>& out)
{
    for (std::size_t la = 0; la <= pad; ++la) {
        auto as = words_of_length(wi.d, la);
        auto bs = words_of_length(wi.d, pad - la);
        for (const auto& a : as)
            for (const auto& b : bs) {
                std::vector<TermWord> terms;
                terms.reserve(g.terms.size());
                for (const auto& t : g.terms) {
                    Word w = a;
                    w.insert(w.end(), t.w.begin(), t.w.end());
                    w.insert(w.end(), b.begin(), b.end());
                    terms.push_back({std::move(w), t.c});
                }
                out.push_back(make_row(wi, terms));
            }
    }
}

void eliminate(Eliminator& el, std::vector<SparseRow>& rows)
{
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SparseRow& a, const SparseRow& b) { return a.idx[0] < b.idx[0]; });
    for (const auto& r : rows)
        el.insert(r);
    rows.clear();
}

std::size_t quotient_dim(const WordIndex& wi, const Eliminator& el, std::size_t len)
{
    return static_cast<std::size_t>(wi.count_upto(len)) - el.pivots_below(wi.count_upto(len));
}

}  // namespace

Algebra QuotientAlgebraApprox::algebra() const
{
    if (!mult_table)
        throw std::logic_error("quotient algebra is not certified; no multiplication table");
    Algebra a;
    a.dim = dim();
    a.mult = *mult_table;
    a.unit = unit_vector(dim(), 0);
    return a;
}

std::size_t QuotientAlgebraApprox::max_word_length() const
{
    std::size_t m = 0;
    for (const auto& w : basis_words)
        m = std::max(m, w.size());
    return m;
}

Vec QuotientAlgebraApprox::word_image(const Word& w) const
{
    std::vector<Vec> hs;
    for (auto l : w)
        hs.push_back(unit_vector(H.dim(), l));
    return bracket_product(hs);
}

Vec QuotientAlgebraApprox::bracket_product(const std::vector<Vec>& hs) const
{
    Algebra a = algebra();
    Vec acc = a.unit;
    for (const auto& h : hs)
        acc = a.multiply(acc, bracket.apply(h));
    return acc;
}

QuotientAlgebraApprox build_partial_hopf_quotient(const HopfAlgebra& h, std::size_t n, std::size_t N,
                                                  std::optional<std::size_t> budget)
{
    if (n > N)
        throw std::invalid_argument("degree n must not exceed the saturation N");
    QuotientAlgebraApprox q;
    q.H = h;
    q.n = n;
    q.N = N;
    std::size_t d = h.dim();
    bool next_level = !budget || N + 1 <= *budget;
    if (budget && N > *budget) {
        q.reason = "saturation " + std::to_string(N) + " exceeds budget " + std::to_string(*budget);
        N = *budget;
        next_level = false;
        if (n > N)
            n = N;
    }
    std::size_t top = next_level ? N + 1 : N;
    LetterElimination le(h);
    WordIndex wi(le.letters(), std::max<std::size_t>(top, 3));
    if (wi.count_upto(top) >= (1ULL << 31))
        throw std::invalid_argument("word space too large for the requested saturation");

    std::vector<std::vector<TermWord>> raw;
    for (const auto& g : raw_generators(h))
        raw.push_back(le.substitute(g));
    auto gens = reduce_generators(raw, le.letters());
    Eliminator el(static_cast<std::size_t>(wi.count_upto(top)));
    std::vector<SparseRow> rows;
    for (const auto& g : gens)
        for (std::size_t pad = 0; g.degree + pad <= N; ++pad)
            padded_rows(wi, g, pad, rows);
    eliminate(el, rows);
    for (std::size_t len = 0; len <= std::min(n + 1, N); ++len)
        q.dims_history.push_back({len, N, quotient_dim(wi, el, len)});
    if (next_level) {
        for (const auto& g : gens)
            if (g.degree <= N + 1)
                padded_rows(wi, g, N + 1 - g.degree, rows);
        eliminate(el, rows);
        for (std::size_t len = 0; len <= n + 1; ++len)
            q.dims_history.push_back({len, N + 1, quotient_dim(wi, el, len)});
    }

    // basis words: non-pivot words of length <= n in the final echelon form
    std::unordered_map<std::uint32_t, std::size_t> pos;
    for (std::uint64_t i = 0; i < wi.count_upto(n); ++i)
        if (!el.is_pivot(static_cast<std::uint32_t>(i))) {
            pos[static_cast<std::uint32_t>(i)] = q.basis_words.size();
            q.basis_words.push_back(le.to_original(wi.word(i)));
        }
    std::size_t dim = q.basis_words.size();

    // w is a word over the original letters
    auto reduce = [&](const Word& w, bool& inside) {
        SparseRow r = make_row(wi, le.substitute({{w, Scalar(1)}}));
        Vec v(dim);
        inside = true;
        for (auto& [i, c] : el.normal_form(r)) {
            auto it = pos.find(i);
            if (it == pos.end())
                inside = false;
            else
                v[it->second] = c;
        }
        return v;
    };

    WordIndex full(d, n);
    std::size_t nwords = static_cast<std::size_t>(full.count_upto(n));
    q.projection = LinearMap(dim, nwords);
    bool inside = true;
    for (std::size_t i = 0; i < nwords; ++i) {
        bool ok = true;
        q.projection.set_column(i, reduce(full.word(i), ok));
        inside = inside && ok;
    }
    q.bracket = LinearMap(dim, d);
    for (std::size_t k = 0; k < d; ++k) {
        bool ok = true;
        q.bracket.set_column(k, reduce(Word{static_cast<std::uint32_t>(k)}, ok));
        inside = inside && ok;
    }

    auto fail = [&](const std::string& why) {
        if (q.reason.empty())
            q.reason = why;
        q.certified_stable = false;
        return q;
    };
    if (!q.reason.empty())
        return fail(q.reason);
    if (!next_level)
        return fail("budget does not allow the saturation check at N+1");
    auto dim_at = [&](std::size_t len, std::size_t NN) {
        for (const auto& r : q.dims_history)
            if (r.n == len && r.N == NN)
                return r.dim;
        return static_cast<std::size_t>(-1);
    };
    std::size_t a = dim_at(n, N), b = dim_at(n, N + 1), c = dim_at(n + 1, N + 1);
    if (a != b || b != c) {
        std::ostringstream os;
        os << "dimensions not stable: dim(n,N)=" << a << " dim(n,N+1)=" << b << " dim(n+1,N+1)=" << c;
        return fail(os.str());
    }
    if (!inside)
        return fail("normal forms of short words leave the basis");
    if (2 * q.max_word_length() > N + 1)
        return fail("closure check needs saturation at least " + std::to_string(2 * q.max_word_length() - 1));

    LinearMap mt(dim, dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
            Word w = q.basis_words[i];
            w.insert(w.end(), q.basis_words[j].begin(), q.basis_words[j].end());
            bool ok = true;
            mt.set_column(i * dim + j, reduce(w, ok));
            if (!ok)
                return fail("product " + word_to_string(q.basis_words[i], h) + " * " +
                            word_to_string(q.basis_words[j], h) + " does not reduce to basis words");
        }
    q.mult_table = mt;
    if (!verify_algebra(q.algebra(), "W").all_pass()) {
        q.mult_table.reset();
        return fail("reduced multiplication table is not associative and unital");
    }
    if (!check_partial_rep(h, q.algebra(), q.bracket).all_pass()) {
        q.mult_table.reset();
        return fail("brackets do not form a partial representation");
    }
    for (std::size_t i = 0; i < dim; ++i)
        if (q.word_image(q.basis_words[i]) != unit_vector(dim, i)) {
            q.mult_table.reset();
            return fail("basis word " + word_to_string(q.basis_words[i], h) + " is not the product of its letters");
        }
    q.certified_stable = true;
    return q;
}

Vec SubalgebraClosure::coordinates(const Vec& w) const
{
    auto x = solve(basis, LinearMap::column_vector(w));
    if (!x)
        throw std::invalid_argument("element is not in the subalgebra");
    return x->column(0);
}

SubalgebraClosure close_subalgebra(const Algebra& w, const std::vector<Vec>& generators, std::size_t max_rounds)
{
    SubalgebraClosure s;
    s.generators = generators;
    std::vector<Vec> elems{w.unit};
    s.gen_seq.push_back({});
    Subspace span = Subspace::span(w.dim, elems);
    std::vector<std::size_t> frontier{0};
    while (!frontier.empty() && s.rounds < max_rounds) {
        ++s.rounds;
        std::vector<std::size_t> next;
        for (auto bi : frontier)
            for (std::size_t g = 0; g < generators.size(); ++g) {
                Vec x = w.multiply(elems[bi], generators[g]);
                if (span.contains(x))
                    continue;
                elems.push_back(x);
                auto seq = s.gen_seq[bi];
                seq.push_back(g);
                s.gen_seq.push_back(seq);
                span = Subspace::span(w.dim, elems);
                next.push_back(elems.size() - 1);
            }
        frontier = std::move(next);
    }
    s.closed = frontier.empty();
    s.basis = LinearMap::from_columns(w.dim, elems);
    std::size_t a = elems.size();
    s.algebra.dim = a;
    s.algebra.mult = LinearMap(a, a * a);
    s.algebra.unit = unit_vector(a, 0);
    if (s.closed)
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < a; ++j)
                s.algebra.mult.set_column(i * a + j, s.coordinates(w.multiply(elems[i], elems[j])));
    return s;
}

namespace {

// Σ [x(h1)][y(h2)] for each basis h, where x, y are maps H -> H.
std::vector<Vec> split_generators(const QuotientAlgebraApprox& q, const LinearMap& first, const LinearMap& second)
{
    const HopfAlgebra& h = q.H;
    std::size_t d = h.dim();
    Algebra w = q.algebra();
    std::vector<Vec> out;
    for (std::size_t k = 0; k < d; ++k) {
        Vec acc(q.dim());
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b) {
                const Scalar& c = h.delta()(a * d + b, k);
                if (sgn(c) == 0)
                    continue;
                Vec p = w.multiply(q.bracket.apply(first.column(a)), q.bracket.apply(second.column(b)));
                acc = acc + scaled(p, c);
            }
        out.push_back(acc);
    }
    return out;
}

std::size_t closure_rounds()
{
    auto b = env_budget();
    return b ? *b : 64;
}

}  // namespace

std::vector<Vec> epsilon_generators(const QuotientAlgebraApprox& q)
{
    return split_generators(q, LinearMap::identity(q.H.dim()), q.H.S());
}

std::vector<Vec> epsilon_tilde_generators(const QuotientAlgebraApprox& q)
{
    return split_generators(q, q.H.S(), LinearMap::identity(q.H.dim()));
}

SubalgebraClosure extract_Apar(const QuotientAlgebraApprox& q)
{
    return close_subalgebra(q.algebra(), epsilon_generators(q), closure_rounds());
}

SubalgebraClosure extract_Apar_tilde(const QuotientAlgebraApprox& q)
{
    return close_subalgebra(q.algebra(), epsilon_tilde_generators(q), closure_rounds());
}

InducedMap induced_algebra_map(const QuotientAlgebraApprox& q, const Algebra& b, const LinearMap& pi)
{
    InducedMap r;
    if (!q.certified_stable) {
        r.failure = "quotient is not certified: " + q.reason;
        return r;
    }
    auto rep = check_partial_rep(q.H, b, pi);
    if (!rep.all_pass()) {
        for (const auto& c : rep.checks)
            if (!c.pass) {
                r.failure = "not a partial representation (" + c.id + ")";
                break;
            }
        return r;
    }
    r.map = LinearMap(b.dim, q.dim());
    for (std::size_t i = 0; i < q.dim(); ++i) {
        Vec acc = b.unit;
        for (auto l : q.basis_words[i])
            acc = b.multiply(acc, pi.column(l));
        r.map.set_column(i, acc);
    }
    if (!is_algebra_map(r.map, q.algebra(), b)) {
        r.failure = "induced map is not multiplicative";
        return r;
    }
    if (!(r.map * q.bracket == pi)) {
        r.failure = "induced map does not restrict to pi";
        return r;
    }
    r.exists = true;
    // W is spanned by products of brackets, so an algebra map is fixed by pi
    r.unique = true;
    return r;
}

namespace {

// Image under an anti-multiplicative map fixed on generators, following gen_seq.
LinearMap anti_extend(const SubalgebraClosure& a, const Algebra& w, const std::vector<Vec>& gen_images)
{
    LinearMap t(w.dim, a.dim());
    for (std::size_t j = 0; j < a.dim(); ++j) {
        Vec acc = w.unit;
        for (auto g : a.gen_seq[j])
            acc = w.multiply(gen_images[g], acc);
        t.set_column(j, acc);
    }
    return t;
}

// For each letter j (0-based) of a word of length n, split it into legs[j]
// pieces, regroup the legs as listed, multiply each group in H, send each
// group through f: H -> W and multiply the results in W.
Vec split_regroup(const QuotientAlgebraApprox& q, const Word& w, const std::vector<std::size_t>& legs,
                  const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& groups, const LinearMap& f)
{
    const HopfAlgebra& h = q.H;
    std::size_t d = h.dim();
    Algebra wa = q.algebra();
    if (w.empty())
        return wa.unit;
    std::vector<std::size_t> dims(w.size(), d);
    Vec e(product(dims));
    std::size_t flat = 0;
    for (auto l : w)
        flat = flat * d + l;
    e[flat] = 1;
    Pipe p(dims, LinearMap::column_vector(e));
    std::vector<std::size_t> start(w.size());
    std::size_t pos = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        start[j] = pos;
        if (legs[j] == 0)
            p.kill(pos, h.eps());
        else if (legs[j] > 1)
            p.apply(pos, 1, iterated_comult(h.coalg, legs[j]), std::vector<std::size_t>(legs[j], d));
        pos += legs[j];
    }
    std::vector<std::size_t> order;
    for (const auto& g : groups)
        for (auto [j, i] : g)
            order.push_back(start[j] + i);
    p.permute(order);
    std::size_t at = 0;
    for (const auto& g : groups) {
        if (g.empty())
            p.insert(at, h.one());
        else
            for (std::size_t k = 1; k < g.size(); ++k)
                p.merge(at, h.m());
        ++at;
    }
    for (std::size_t k = 0; k < groups.size(); ++k)
        p.map(k, f);
    for (std::size_t k = 1; k < groups.size(); ++k)
        p.merge(0, wa.mult);
    return p.value().column(0);
}

// E: H -> W, h -> ε_h (or ε̃_h); linear in h.
LinearMap generator_map(const std::vector<Vec>& gens, std::size_t wdim)
{
    return LinearMap::from_columns(wdim, gens);
}

}  // namespace

Vec left_counit_word(const QuotientAlgebraApprox& q, const Word& w, const LinearMap& e)
{
    // factor k = h^1_(k) h^2_(k-1) ... h^k_(1)
    std::size_t n = w.size();
    std::vector<std::size_t> legs(n);
    for (std::size_t j = 0; j < n; ++j)
        legs[j] = n - j;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j)
            groups[k].push_back({j, k - j});
    return split_regroup(q, w, legs, groups, e);
}

Vec right_counit_word(const QuotientAlgebraApprox& q, const Word& w, const LinearMap& et)
{
    // factor k = h^k_(k) h^(k+1)_(k) ... h^n_(k)
    std::size_t n = w.size();
    std::vector<std::size_t> legs(n);
    for (std::size_t j = 0; j < n; ++j)
        legs[j] = j + 1;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = k; j < n; ++j)
            groups[k].push_back({j, k});
    return split_regroup(q, w, legs, groups, et);
}

HopfAlgebroidOnHpar hopf_algebroid_on_Hpar(const QuotientAlgebraApprox& q)
{
    HopfAlgebroidOnHpar r;
    r.report.subject = "Hopf algebroid on " + q.H.name + "_par";
    if (!q.certified_stable)
        throw std::invalid_argument("Hopf algebroid needs a certified quotient: " + q.reason);
    const HopfAlgebra& h = q.H;
    std::size_t d = h.dim();
    std::size_t qd = q.dim();
    Algebra w = q.algebra();
    LinearMap sinv = h.S_inv();

    auto eg = epsilon_generators(q);
    auto etg = epsilon_tilde_generators(q);
    r.Apar = close_subalgebra(w, eg, closure_rounds());
    r.Apar_tilde = close_subalgebra(w, etg, closure_rounds());
    r.report.expect("A_par closed", r.Apar.closed);
    r.report.expect("A~_par closed", r.Apar_tilde.closed);
    if (!r.Apar.closed || !r.Apar_tilde.closed)
        return r;
    r.source = r.Apar.basis;
    r.source_R = r.Apar_tilde.basis;

    // t_L(ε_h) = [h2][S^-1 h1], t_R(ε̃_h) = [S^-1 h2][h1]
    std::vector<Vec> tl, tr;
    for (std::size_t k = 0; k < d; ++k) {
        Vec a(qd), b(qd);
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t y = 0; y < d; ++y) {
                const Scalar& c = h.delta()(x * d + y, k);
                if (sgn(c) == 0)
                    continue;
                a = a + scaled(w.multiply(q.bracket.column(y), q.bracket.apply(sinv.column(x))), c);
                b = b + scaled(w.multiply(q.bracket.apply(sinv.column(y)), q.bracket.column(x)), c);
            }
        tl.push_back(a);
        tr.push_back(b);
    }
    r.target = anti_extend(r.Apar, w, tl);
    r.target_R = anti_extend(r.Apar_tilde, w, tr);

    auto anti_mult = [&](const SubalgebraClosure& a, const LinearMap& t) {
        std::size_t n = a.dim();
        LinearMap lhs(qd, n * n), rhs(qd, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                lhs.set_column(i * n + j, t.apply(a.algebra.mult.column(i * n + j)));
                rhs.set_column(i * n + j, w.multiply(t.column(j), t.column(i)));
            }
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l, rr] = anti_mult(r.Apar, r.target);
        r.report.expect_equal("t_L anti-multiplicative", l, rr, {r.Apar.dim(), r.Apar.dim()});
        auto [l2, r2] = anti_mult(r.Apar_tilde, r.target_R);
        r.report.expect_equal("t_R anti-multiplicative", l2, r2, {r.Apar_tilde.dim(), r.Apar_tilde.dim()});
    }
    auto commute = [&](const LinearMap& s, const LinearMap& t) {
        LinearMap lhs(qd, s.cols() * t.cols()), rhs(qd, s.cols() * t.cols());
        for (std::size_t i = 0; i < s.cols(); ++i)
            for (std::size_t j = 0; j < t.cols(); ++j) {
                lhs.set_column(i * t.cols() + j, w.multiply(s.column(i), t.column(j)));
                rhs.set_column(i * t.cols() + j, w.multiply(t.column(j), s.column(i)));
            }
        return std::make_pair(lhs, rhs);
    };
    {
        auto [l, rr] = commute(r.source, r.target);
        r.report.expect_equal("s_L t_L commute", l, rr, {r.source.cols(), r.target.cols()});
        auto [l2, r2] = commute(r.source_R, r.target_R);
        r.report.expect_equal("s_R t_R commute", l2, r2, {r.source_R.cols(), r.target_R.cols()});
    }

    // counits on basis words
    LinearMap egm = generator_map(eg, qd), etgm = generator_map(etg, qd);
    LinearMap el(qd, qd), er(qd, qd);
    for (std::size_t i = 0; i < qd; ++i) {
        el.set_column(i, left_counit_word(q, q.basis_words[i], egm));
        er.set_column(i, right_counit_word(q, q.basis_words[i], etgm));
    }
    Subspace apar = Subspace::span_columns(r.Apar.basis);
    Subspace apart = Subspace::span_columns(r.Apar_tilde.basis);
    bool in_l = true, in_r = true;
    for (std::size_t i = 0; i < qd; ++i) {
        in_l = in_l && apar.contains(el.column(i));
        in_r = in_r && apart.contains(er.column(i));
    }
    r.report.expect("eps_L lands in A_par", in_l);
    r.report.expect("eps_R lands in A~_par", in_r);
    if (!in_l || !in_r)
        return r;
    r.counit_L = *solve(r.Apar.basis, el);
    r.counit_R = *solve(r.Apar_tilde.basis, er);
    r.report.expect_equal("eps_L s_L = id", r.counit_L * r.source, LinearMap::identity(r.Apar.dim()));
    r.report.expect_equal("eps_L t_L = id", r.counit_L * r.target, LinearMap::identity(r.Apar.dim()));
    r.report.expect_equal("eps_R s_R = id", r.counit_R * r.source_R, LinearMap::identity(r.Apar_tilde.dim()));
    r.report.expect_equal("eps_R t_R = id", r.counit_R * r.target_R, LinearMap::identity(r.Apar_tilde.dim()));

    // Δ̂(w) = Π Σ [h1]⊗[h2]; multiplicative on words
    Algebra ww = tensor_algebra(w, w);
    LinearMap letter_delta = tensor_product(q.bracket, q.bracket) * h.delta();   // H -> W⊗W
    r.comult_L = LinearMap(qd * qd, qd);
    for (std::size_t i = 0; i < qd; ++i) {
        Vec acc = ww.unit;
        for (auto l : q.basis_words[i])
            acc = ww.multiply(acc, letter_delta.column(l));
        r.comult_L.set_column(i, acc);
    }
    std::vector<Vec> bal;
    for (std::size_t a = 0; a < r.Apar.dim(); ++a)
        for (std::size_t i = 0; i < qd; ++i)
            for (std::size_t j = 0; j < qd; ++j) {
                Vec ei = unit_vector(qd, i), ej = unit_vector(qd, j);
                Vec x = tensor_product(LinearMap::column_vector(w.multiply(r.target.column(a), ei)),
                                       LinearMap::column_vector(ej)).column(0);
                Vec y = tensor_product(LinearMap::column_vector(ei),
                                       LinearMap::column_vector(w.multiply(r.source.column(a), ej))).column(0);
                bal.push_back(x - y);
            }
    r.balancing = Subspace::span(qd * qd, bal);
    {
        bool ok = true;
        std::vector<std::size_t> wit;
        for (std::size_t i = 0; i < qd && ok; ++i)
            for (std::size_t j = 0; j < qd && ok; ++j) {
                Vec prod = ww.multiply(r.comult_L.column(i), r.comult_L.column(j));
                Vec via = r.comult_L.apply(w.mult.column(i * qd + j));
                if (!r.balancing.contains(prod - via)) {
                    ok = false;
                    wit = {i, j};
                }
            }
        auto& c = r.report.expect("Delta_L well defined modulo balancing", ok);
        c.witness = wit;
    }
    {   // s(ε(x1))x2 = x = t(ε(x2))x1
        Pipe p(qd);
        p.split(0, r.comult_L, qd, qd).map(0, r.source * r.counit_L).merge(0, w.mult);
        r.report.expect_equal("Delta_L counital (source)", p.value(), LinearMap::identity(qd), {qd});
        Pipe p2(qd);
        p2.split(0, r.comult_L, qd, qd).map(1, r.target * r.counit_L).swap(0, 1).merge(0, w.mult);
        r.report.expect_equal("Delta_L counital (target)", p2.value(), LinearMap::identity(qd), {qd});
    }

    // S*(w) = [S h^n]...[S h^1]
    r.antipode_star = LinearMap(qd, qd);
    for (std::size_t i = 0; i < qd; ++i) {
        std::vector<Vec> hs;
        const Word& wd = q.basis_words[i];
        for (std::size_t k = wd.size(); k-- > 0;)
            hs.push_back(h.S().column(wd[k]));
        r.antipode_star.set_column(i, q.bracket_product(hs));
    }
    {
        LinearMap lhs(qd, qd * qd), rhs(qd, qd * qd);
        for (std::size_t i = 0; i < qd; ++i)
            for (std::size_t j = 0; j < qd; ++j) {
                lhs.set_column(i * qd + j, r.antipode_star.apply(w.mult.column(i * qd + j)));
                rhs.set_column(i * qd + j, w.multiply(r.antipode_star.column(j), r.antipode_star.column(i)));
            }
        r.report.expect_equal("S* anti-multiplicative", lhs, rhs, {qd, qd});
    }
    return r;
}

}  // namespace hopfpar
