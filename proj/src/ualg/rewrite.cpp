#include <optional>

#include "qschur/ualg.hpp"

namespace qschur {

namespace {

bool is_k(Letter x) { return x == Letter::K || x == Letter::Ki; }

// A pair (x, y) is a redex unless it respects the order F < K-letters < E
// with K and K^-1 never adjacent.
bool is_redex(Letter x, Letter y) {
    if (x == Letter::E) return y != Letter::E;
    if (is_k(x)) return y == Letter::F || (is_k(y) && x != y);
    return false;
}

std::optional<std::size_t> find_redex(const Word& w, Strategy strategy) {
    if (w.size() < 2) return std::nullopt;
    if (strategy == Strategy::Leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (is_redex(w[i], w[i + 1])) return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (is_redex(w[i], w[i + 1])) return i;
    }
    return std::nullopt;
}

Word splice(const Word& w, std::size_t i, std::initializer_list<Letter> middle) {
    Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
    out.insert(out.end(), middle.begin(), middle.end());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
    return out;
}

void accumulate(WordSum& sum, Word w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = sum.emplace(std::move(w), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) sum.erase(it);
    }
}

UMonomial to_monomial(const Word& w) {
    UMonomial m;
    for (Letter x : w) {
        switch (x) {
            case Letter::F: ++m.a; break;
            case Letter::K: ++m.s; break;
            case Letter::Ki: --m.s; break;
            case Letter::E: ++m.b; break;
        }
    }
    return m;
}

}  // namespace

UElement reduce_words(const WordSum& input, Strategy strategy) {
    static const RationalFunction minus_v2(Laurent::monomial(GaussianInt(-1), 2));
    static const RationalFunction minus_vm2(Laurent::monomial(GaussianInt(-1), -2));
    static const RationalFunction h = RationalFunction(1) / RationalFunction(Laurent::v(1) - Laurent::v(-1));

    WordSum active = input;
    UElement result;
    while (!active.empty()) {
        auto node = active.extract(active.begin());
        const Word& w = node.key();
        const RationalFunction& c = node.mapped();
        auto pos = find_redex(w, strategy);
        if (!pos) {
            result.add_term(to_monomial(w), c);
            continue;
        }
        const std::size_t i = *pos;
        const Letter x = w[i], y = w[i + 1];
        if (x == Letter::E && y == Letter::F) {
            accumulate(active, splice(w, i, {Letter::F, Letter::E}), -c);  // t^2 = -1
            accumulate(active, splice(w, i, {Letter::K}), c * h);
            accumulate(active, splice(w, i, {Letter::Ki}), -(c * h));
        } else if (x == Letter::E) {
            // E K = v^-2 t^2 K E,  E K^-1 = v^2 t^-2 K^-1 E
            accumulate(active, splice(w, i, {y, Letter::E}), c * (y == Letter::K ? minus_vm2 : minus_v2));
        } else if (y == Letter::F) {
            // K F = v^-2 t^2 F K,  K^-1 F = v^2 t^-2 F K^-1
            accumulate(active, splice(w, i, {Letter::F, x}), c * (x == Letter::K ? minus_vm2 : minus_v2));
        } else {
            accumulate(active, splice(w, i, {}), c);
        }
    }
    return result;
}

UElement reduce_word(const Word& w, Strategy strategy) { return reduce_words(WordSum{{w, RationalFunction(1)}}, strategy); }

std::string word_to_string(const Word& w) {
    std::string s;
    for (Letter x : w) {
        if (!s.empty()) s += " ";
        switch (x) {
            case Letter::F: s += "F"; break;
            case Letter::K: s += "K"; break;
            case Letter::Ki: s += "K^-1"; break;
            case Letter::E: s += "E"; break;
        }
    }
    return s.empty() ? "1" : s;
}

UElement word_value(const Word& w) {
    UElement x(RationalFunction(1));
    for (Letter l : w) {
        switch (l) {
            case Letter::F: x = x.times_F(); break;
            case Letter::K: x = x.times_K(1); break;
            case Letter::Ki: x = x.times_K(-1); break;
            case Letter::E: x = x.times_E(); break;
        }
    }
    return x;
}

}  // namespace qschur
