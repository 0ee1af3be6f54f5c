// Copyright 2026 The cgrand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cgrand/codes.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace cgrand {

namespace {

// GF(2^m) with exp/log tables over a fixed primitive polynomial.
class GaloisField {
   public:
    GaloisField(int m, std::uint32_t poly) : size_((1U << m) - 1), exp_(2 * size_), log_(size_ + 1, 0) {
        std::uint32_t x = 1;
        for (std::uint32_t i = 0; i < size_; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x <<= 1;
            if (x & (1U << m)) x ^= poly;
        }
        for (std::uint32_t i = size_; i < 2 * size_; ++i) exp_[i] = exp_[i - size_];
    }

    std::uint32_t order() const { return size_; }
    std::uint32_t alpha_pow(std::uint32_t e) const { return exp_[e % size_]; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }

   private:
    std::uint32_t size_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

// Multiplicative order of x modulo `poly` is 2^m − 1.
bool is_primitive(int m, std::uint32_t poly) {
    const std::uint32_t order = (1U << m) - 1;
    std::uint32_t x = 1;
    for (std::uint32_t i = 1; i <= order; ++i) {
        x <<= 1;
        if (x & (1U << m)) x ^= poly;
        if (x == 1) return i == order;
    }
    return false;
}

std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t s, std::uint32_t order) {
    std::vector<std::uint32_t> coset;
    std::uint32_t e = s % order;
    do {
        coset.push_back(e);
        e = (2 * e) % order;
    } while (e != s % order);
    return coset;
}

// Product of (x + α^e) over the coset; coefficients land in GF(2).
std::vector<std::uint8_t> minimal_polynomial(const GaloisField& gf, const std::vector<std::uint32_t>& coset) {
    std::vector<std::uint32_t> poly{1};
    for (std::uint32_t e : coset) {
        const std::uint32_t root = gf.alpha_pow(e);
        std::vector<std::uint32_t> next(poly.size() + 1, 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= gf.mul(poly[i], root);
        }
        poly = std::move(next);
    }
    std::vector<std::uint8_t> out(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1) throw std::logic_error("minimal polynomial has a coefficient outside GF(2)");
        out[i] = static_cast<std::uint8_t>(poly[i]);
    }
    return out;
}

std::vector<std::uint8_t> multiply_gf2(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
    }
    return out;
}

// x_j = XOR over i ⊇ j of v_i, i.e. x = v·F^{⊗log2 n} with F = [1 0; 1 1].
BitVec polar_transform(const BitVec& v) {
    const std::size_t n = v.size();
    std::vector<std::uint8_t> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = v.test(i) ? 1 : 0;
    for (std::size_t h = 1; h < n; h *= 2) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) x[j] ^= x[j + h];
        }
    }
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, x[i] != 0);
    return out;
}

// y_x = XOR over i ⊆ x of t_i, i.e. F^{⊗log2 n}·t for a column vector t.
BitVec subset_transform(const std::vector<std::uint8_t>& t) {
    const std::size_t n = t.size();
    std::vector<std::uint8_t> y = t;
    for (std::size_t h = 1; h < n; h *= 2) {
        for (std::size_t i = 0; i < n; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) y[j + h] ^= y[j];
        }
    }
    BitVec out(n);
    for (std::size_t i = 0; i < n; ++i) out.set(i, y[i] != 0);
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    return lines;
}

std::size_t parse_size(std::string_view token, const char* what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) tokens.push_back(line.substr(i, j - i));
        i = j;
    }
    return tokens;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

BitVec LinearCode::encode(const BitVec& message) const {
    if (message.size() != k) throw std::invalid_argument("message length must equal k");
    return gf2_vecmat(message, generator);
}

void warn_to_stderr(std::string_view message) { std::cerr << "warning: " << message << '\n'; }

LinearCode code_from_generator(std::string name, const BitMatrix& generator) {
    if (generator.cols() == 0) throw std::invalid_argument("code length must be positive");
    if (gf2_rank(generator) != generator.rows()) {
        throw std::invalid_argument("generator matrix must have full row rank");
    }
    const RowReduction h = gf2_row_reduce(gf2_nullspace(generator));
    BitMatrix parity(0, generator.cols());
    for (std::size_t r = 0; r < h.rank; ++r) parity.append_row(h.reduced.row(r));
    return LinearCode{std::move(name), generator.cols(), generator.rows(), generator, std::move(parity)};
}

LinearCode code_from_matrices(std::string name, const BitMatrix& generator, const BitMatrix& parity_check) {
    const std::size_t n = generator.cols();
    if (n == 0 || parity_check.cols() != n) throw std::invalid_argument("code matrices must share a positive length");
    if (gf2_rank(generator) != generator.rows()) throw std::invalid_argument("generator matrix must have full row rank");
    if (gf2_rank(parity_check) != parity_check.rows()) {
        throw std::invalid_argument("parity-check matrix must have full row rank");
    }
    if (generator.rows() + parity_check.rows() != n) throw std::invalid_argument("dimensions must satisfy k + (n - k) = n");
    const BitMatrix product = gf2_mul_transpose(generator, parity_check);
    for (const BitVec& row : product.row_list()) {
        if (!row.none()) throw std::invalid_argument("generator and parity-check matrices are not orthogonal");
    }
    return LinearCode{std::move(name), n, generator.rows(), generator, parity_check};
}

LinearCode code_from_parity_check(std::string name, const BitMatrix& parity_check, const WarningSink& warn) {
    const std::size_t n = parity_check.cols();
    if (n == 0) throw std::invalid_argument("code length must be positive");
    const std::vector<std::size_t> kept = gf2_independent_rows(parity_check);
    BitMatrix h(0, n);
    for (std::size_t r : kept) h.append_row(parity_check.row(r));
    if (kept.size() != parity_check.rows() && warn) {
        std::ostringstream msg;
        msg << "parity-check matrix has rank " << kept.size() << " < " << parity_check.rows() << " rows; dropped "
            << parity_check.rows() - kept.size() << " dependent row(s), k adjusted to " << n - kept.size();
        warn(msg.str());
    }
    BitMatrix g = gf2_nullspace(h);
    const std::size_t k = g.rows();
    return LinearCode{std::move(name), n, k, std::move(g), std::move(h)};
}

std::uint32_t primitive_polynomial(int m) {
    if (m < 2 || m > 16) throw std::invalid_argument("primitive_polynomial: m out of range");
    for (std::uint32_t poly = (1U << m) | 1U; poly < (2U << m); poly += 2) {
        if (is_primitive(m, poly)) return poly;
    }
    throw std::logic_error("no primitive polynomial found");
}

std::vector<std::uint8_t> bch_generator_polynomial(int m, int t) {
    if (m < 3 || m > 8) throw std::invalid_argument("build_ebch: m must be in [3, 8]");
    if (t < 1) throw std::invalid_argument("build_ebch: t must be positive");
    const GaloisField gf(m, primitive_polynomial(m));
    const std::uint32_t order = gf.order();
    if (static_cast<std::uint32_t>(2 * t - 1) >= order) {
        throw std::invalid_argument("build_ebch: designed distance exceeds code length");
    }

    std::vector<bool> used(order, false);
    std::vector<std::uint8_t> g{1};
    for (std::uint32_t s = 1; s <= static_cast<std::uint32_t>(2 * t - 1); s += 2) {
        if (used[s]) continue;
        const std::vector<std::uint32_t> coset = cyclotomic_coset(s, order);
        for (std::uint32_t e : coset) used[e] = true;
        g = multiply_gf2(g, minimal_polynomial(gf, coset));
    }
    return g;
}

LinearCode build_ebch(int m, int t) {
    const std::vector<std::uint8_t> g = bch_generator_polynomial(m, t);
    const std::size_t length = (std::size_t{1} << m) - 1;
    const std::size_t degree = g.size() - 1;
    if (degree >= length) throw std::invalid_argument("build_ebch: parameters give k <= 0");
    const std::size_t k = length - degree;
    const std::size_t n = length + 1;

    BitMatrix generator(k, n);
    for (std::size_t r = 0; r < k; ++r) {
        bool parity = false;
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (g[i]) {
                generator.set(r, r + i);
                parity = !parity;
            }
        }
        generator.set(r, n - 1, parity);
    }
    return code_from_generator("ebch(" + std::to_string(n) + "," + std::to_string(k) + ")", generator);
}

RateProfile parse_rate_profile(std::string_view text) {
    std::vector<std::string_view> content;
    for (std::string_view line : split_lines(text)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        content.push_back(line);
    }
    if (content.size() != 2) throw std::invalid_argument("rate profile must have a length line and a position line");
    RateProfile profile;
    profile.n = parse_size(trim(content[0]), "profile length");
    for (std::string_view tok : split_ws(content[1])) profile.info_set.push_back(parse_size(tok, "profile position"));
    std::sort(profile.info_set.begin(), profile.info_set.end());
    if (std::adjacent_find(profile.info_set.begin(), profile.info_set.end()) != profile.info_set.end()) {
        throw std::invalid_argument("rate profile has duplicate positions");
    }
    for (std::size_t pos : profile.info_set) {
        if (pos < 1 || pos > profile.n) throw std::invalid_argument("rate profile position out of range");
    }
    return profile;
}

std::string format_rate_profile(const RateProfile& profile) {
    std::ostringstream out;
    out << profile.n << '\n';
    for (std::size_t i = 0; i < profile.info_set.size(); ++i) {
        if (i > 0) out << ' ';
        out << profile.info_set[i];
    }
    out << '\n';
    return out.str();
}

RateProfile pac64_default_profile() {
    RateProfile profile{64, {}};
    std::vector<std::size_t> weight4;
    for (std::size_t i = 0; i < 64; ++i) {
        const int w = std::popcount(i);
        if (w >= 3) {
            profile.info_set.push_back(i + 1);
        } else if (w == 2) {
            weight4.push_back(i + 1);
        }
    }
    std::sort(weight4.rbegin(), weight4.rend());
    profile.info_set.push_back(weight4[0]);
    profile.info_set.push_back(weight4[1]);
    std::sort(profile.info_set.begin(), profile.info_set.end());
    return profile;
}

BitVec pac_default_polynomial() { return BitVec::from_bits({1, 0, 1, 1, 0, 1, 1}); }

LinearCode build_pac(const RateProfile& profile, const BitVec& poly) {
    const std::size_t n = profile.n;
    if (n == 0 || !std::has_single_bit(n)) throw std::invalid_argument("build_pac: n must be a power of two");
    if (profile.info_set.empty()) throw std::invalid_argument("build_pac: empty info set");
    if (poly.empty() || !poly.test(0)) throw std::invalid_argument("build_pac: polynomial must start with 1");

    std::vector<bool> is_info(n, false);
    BitMatrix generator(0, n);
    for (std::size_t pos : profile.info_set) {
        if (pos < 1 || pos > n) throw std::invalid_argument("build_pac: info position out of range");
        if (is_info[pos - 1]) throw std::invalid_argument("build_pac: duplicate info position");
        is_info[pos - 1] = true;
        BitVec v(n);
        for (std::size_t j = 0; j < poly.size() && pos - 1 + j < n; ++j) {
            if (poly.test(j)) v.set(pos - 1 + j);
        }
        generator.append_row(polar_transform(v));
    }

    // c = u·T·F and F is an involution, so u = c·F·T⁻¹. Frozen u_j = 0 gives
    // the check c · (F·t_j) = 0 with t_j column j of T⁻¹; T⁻¹ is the upper
    // triangular Toeplitz matrix of the power series 1/poly(x).
    std::vector<std::uint8_t> inverse(n, 0);
    inverse[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        std::uint8_t acc = 0;
        for (std::size_t i = 1; i <= k && i < poly.size(); ++i) {
            if (poly.test(i)) acc ^= inverse[k - i];
        }
        inverse[k] = acc;
    }
    BitMatrix parity(0, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (is_info[j]) continue;
        std::vector<std::uint8_t> column(n, 0);
        for (std::size_t i = 0; i <= j; ++i) column[i] = inverse[j - i];
        parity.append_row(subset_transform(column));
    }
    return code_from_matrices(
        "pac(" + std::to_string(n) + "," + std::to_string(profile.info_set.size()) + ")", generator, parity);
}

LinearCode load_parity_check(std::string_view text, const WarningSink& warn, std::string name) {
    const std::vector<std::string_view> lines = split_lines(text);
    if (lines.empty()) throw std::invalid_argument("parity-check file is empty");
    const std::vector<std::string_view> header = split_ws(lines[0]);
    if (header.size() != 2) throw std::invalid_argument("parity-check header must be 'n k'");
    const std::size_t n = parse_size(header[0], "n");
    const std::size_t k = parse_size(header[1], "k");
    if (n == 0 || k > n) throw std::invalid_argument("parity-check header needs 0 <= k <= n and n > 0");
    if (lines.size() - 1 != n - k) {
        throw std::invalid_argument("parity-check file has " + std::to_string(lines.size() - 1) + " rows, expected " +
                                    std::to_string(n - k));
    }
    BitMatrix h(0, n);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const std::string_view row = trim(lines[r]);
        if (row.size() != n) {
            throw std::invalid_argument("parity-check row " + std::to_string(r) + " has length " +
                                        std::to_string(row.size()) + ", expected " + std::to_string(n));
        }
        h.append_row(BitVec::from_string(row));
    }
    return code_from_parity_check(std::move(name), h, warn);
}

std::string save_parity_check(const LinearCode& code) {
    std::string out = std::to_string(code.n) + " " + std::to_string(code.k) + "\n";
    for (const BitVec& row : code.parity_check.row_list()) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

LinearCode resolve_code(std::string_view id, const WarningSink& warn) {
    if (id == "ebch128") {
        LinearCode code = build_ebch(7, 3);
        code.name = "ebch128";
        return code;
    }
    if (id == "ebch8") {
        LinearCode code = build_ebch(3, 1);
        code.name = "ebch8";
        return code;
    }
    if (id == "pac64") {
        LinearCode code = build_pac(pac64_default_profile(), pac_default_polynomial());
        code.name = "pac64";
        return code;
    }
    constexpr std::string_view kFilePrefix = "file:";
    if (id.starts_with(kFilePrefix)) {
        const std::string path(id.substr(kFilePrefix.size()));
        return load_parity_check(read_file(path), warn, std::string(id));
    }
    throw std::invalid_argument("unknown code id '" + std::string(id) + "' (expected ebch128, ebch8, pac64 or file:PATH)");
}

}  // namespace cgrand
