#include "hopfexp/util.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>

namespace hopfexp {

std::string errc_name(Errc code) {
    switch (code) {
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::MalformedLiteral: return "MalformedLiteral";
        case Errc::NonReducibleResidue: return "NonReducibleResidue";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotMonic: return "NotMonic";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::Singular: return "Singular";
        case Errc::NoAntipode: return "NoAntipode";
        case Errc::AxiomViolation: return "AxiomViolation";
        case Errc::InvalidGroupTable: return "InvalidGroupTable";
        case Errc::NoPrimitiveRoot: return "NoPrimitiveRoot";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidTwist: return "InvalidTwist";
        case Errc::CoradicalUnavailable: return "CoradicalUnavailable";
        case Errc::NotSemisimpleCoradical: return "NotSemisimpleCoradical";
        case Errc::ZeroOneComponent: return "ZeroOneComponent";
        case Errc::SeparatingElementNotFound: return "SeparatingElementNotFound";
        case Errc::FieldLacksRoots: return "FieldLacksRoots";
        case Errc::NotChar0: return "NotChar0";
        case Errc::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
        case Errc::UsageError: return "UsageError";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

// --- primality ---------------------------------------------------------------

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = static_cast<std::uint64_t>(n - 1);
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic witness set for all 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, static_cast<std::uint64_t>(n));
        if (x == 1 || x == static_cast<std::uint64_t>(n - 1)) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, static_cast<std::uint64_t>(n));
            if (x == static_cast<std::uint64_t>(n - 1)) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_mpz(const mpz_class& n) {
    if (n.fits_slong_p()) return is_prime_i64(n.get_si());
    return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

namespace {

mpz_class pollard_brent(const mpz_class& n, SplitMix64& rng) {
    if (n % 2 == 0) return 2;
    while (true) {
        mpz_class y = static_cast<unsigned long>(rng.below(1 << 30)) % n + 1;
        mpz_class c = static_cast<unsigned long>(rng.below(1 << 30)) % n + 1;
        mpz_class m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class lim = std::min(m, mpz_class(r - k));
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                mpz_class d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            }
        }
        if (g != n) return g;
    }
}

void factor_rec(mpz_class n, std::map<mpz_class, int>& out, SplitMix64& rng) {
    if (n == 1) return;
    if (is_prime_mpz(n)) {
        out[n] += 1;
        return;
    }
    mpz_class d = pollard_brent(n, rng);
    factor_rec(d, out, rng);
    factor_rec(n / d, out, rng);
}

}  // namespace

std::vector<std::pair<mpz_class, int>> factor_mpz(const mpz_class& n_in) {
    if (n_in <= 0) throw Error(Errc::Internal, "factor_mpz: positive input required");
    mpz_class n = n_in;
    std::map<mpz_class, int> acc;
    for (std::int64_t p = 2; p < 100000 && mpz_class(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
        while (n % p == 0) { acc[mpz_class(p)] += 1; n /= p; }
    }
    if (n > 1) {
        SplitMix64 rng(0x5eedf00dULL);
        factor_rec(n, acc, rng);
    }
    return {acc.begin(), acc.end()};
}

std::vector<std::pair<std::int64_t, int>> factor_i64(std::int64_t n) {
    auto fz = factor_mpz(mpz_class(static_cast<long>(n)));
    std::vector<std::pair<std::int64_t, int>> out;
    for (auto& [p, e] : fz) out.emplace_back(p.get_si(), e);
    return out;
}

std::int64_t euler_phi(std::int64_t n) {
    std::int64_t result = n;
    for (auto& [p, e] : factor_i64(n)) result = result / p * (p - 1);
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    std::vector<std::int64_t> out{1};
    for (auto& [p, e] : factor_i64(n)) {
        std::size_t sz = out.size();
        std::int64_t pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class lcm_mpz(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// --- sha256 ------------------------------------------------------------------

namespace {

struct Sha256 {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::uint64_t total = 0;
    unsigned char buf[64];
    std::size_t fill = 0;

    static std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void block(const unsigned char* p) {
        static const std::uint32_t K[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1, 0x923f82a4, 0xab1c5ed5,
            0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3, 0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174,
            0xe49b69c1, 0xefbe4786, 0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147, 0x06ca6351, 0x14292967,
            0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13, 0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85,
            0xa2bfe8a1, 0xa81a664b, 0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a, 0x5b9cca4f, 0x682e6ff3,
            0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208, 0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
                   (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5], g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            std::uint32_t S1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = hh + S1 + ch + K[i] + w[i];
            std::uint32_t S0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = S0 + maj;
            hh = g; g = f; f = e; e = d + t1; d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const unsigned char* p, std::size_t n) {
        total += n;
        while (n) {
            std::size_t take = std::min(n, 64 - fill);
            std::memcpy(buf + fill, p, take);
            fill += take; p += take; n -= take;
            if (fill == 64) { block(buf); fill = 0; }
        }
    }

    std::string finish() {
        std::uint64_t bits = total * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (fill != 56) update(&zero, 1);
        unsigned char len[8];
        for (int i = 0; i < 8; ++i) len[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
        update(len, 8);
        char out[65];
        for (int i = 0; i < 8; ++i) std::snprintf(out + 8 * i, 9, "%08x", h[i]);
        return std::string(out, 64);
    }
};

}  // namespace

std::string sha256_hex(std::string_view data) {
    Sha256 s;
    s.update(reinterpret_cast<const unsigned char*>(data.data()), data.size());
    return s.finish();
}

void atomic_write_file(const std::string& path, std::string_view content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::Internal, "cannot open " + tmp + " for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw Error(Errc::Internal, "short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error(Errc::Internal, "rename failed for " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace hopfexp
