#include "nbpc/weight3.hpp"

#include <cstdio>
#include <cstring>
#include <string>

#include "nbpc/errors.hpp"

namespace nbpc {

bool circular_gaps_ok(int m, const std::vector<int>& exponents) {
    const int L = (1 << m) - 1;
    const int n = static_cast<int>(exponents.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int d = (exponents[static_cast<std::size_t>(j)] - exponents[static_cast<std::size_t>(i)]) % L;
            if (d < 0) d += L;
            if (std::min(d, L - d) < m) return false;
        }
    }
    return true;
}

bool s2_is_zero(const FieldContext& ctx, const CoeffSet& H) {
    if (ctx.m <= 2) throw config_error("s2_is_zero: requires m > 2");
    if (H.m != ctx.m) throw integrity_error("s2_is_zero: coefficient set built for a different field");
    return circular_gaps_ok(ctx.m, H.exponents);
}

int max_dc_with_s2_zero(int m) {
    if (m <= 2) throw config_error("max_dc_with_s2_zero: requires m > 2");
    return (1 << m) / m;
}

namespace {

// t2[a] = S3({alpha^0, alpha^a}): a weight-3 codeword of the pair check has
// symbol weights (1,2) or (2,1); fixing the weight-1 side forces the other.
std::uint32_t t2_entry(const FieldContext& ctx, int a) {
    const int L = ctx.q - 1;
    std::uint32_t count = 0;
    for (int c = 0; c < ctx.m; ++c) {
        int e = a + c;
        if (e >= L) e -= L;
        if (ctx.weight[ctx.antilog[static_cast<std::size_t>(e)]] == 2) ++count;  // W(x2)=1, W(x1)=2
        e = c - a;
        if (e < 0) e += L;
        if (ctx.weight[ctx.antilog[static_cast<std::size_t>(e)]] == 2) ++count;  // W(x1)=1, W(x2)=2
    }
    return count;
}

}  // namespace

Weight3Tables build_tables(const FieldContext& ctx) {
    const int q = ctx.q;
    const int L = q - 1;
    const int m = ctx.m;

    Weight3Tables T;
    T.m = m;
    T.q = q;
    T.primitive_poly = ctx.primitive_poly;
    T.t2.assign(static_cast<std::size_t>(L), 0);
    T.t3.assign(static_cast<std::size_t>(L) * static_cast<std::size_t>(L), 0);

    for (int a = 0; a < L; ++a) T.t2[static_cast<std::size_t>(a)] = t2_entry(ctx, a);

#pragma omp parallel for schedule(dynamic, 8)
    for (int a = 0; a < L; ++a) {
        gf_elem u[16];
        for (int c = 0; c < m; ++c) {
            int e = a + c;
            if (e >= L) e -= L;
            u[c] = ctx.antilog[static_cast<std::size_t>(e)];
        }
        std::uint32_t* row = &T.t3[static_cast<std::size_t>(a) * static_cast<std::size_t>(L)];
        for (int b = a; b < L; ++b) {
            // weight-(1,1,1) codewords: x2, x3 range over the weight-1
            // elements; x1 = h2*x2 + h3*x3 must itself have weight 1
            std::uint32_t cnt = 0;
            for (int c3 = 0; c3 < m; ++c3) {
                int e = b + c3;
                if (e >= L) e -= L;
                const gf_elem v = ctx.antilog[static_cast<std::size_t>(e)];
                for (int c2 = 0; c2 < m; ++c2) {
                    if (ctx.weight[u[c2] ^ v] == 1) ++cnt;
                }
            }
            cnt += T.t2[static_cast<std::size_t>(a)] + T.t2[static_cast<std::size_t>(b)] +
                   T.t2[static_cast<std::size_t>(b - a)];
            row[b] = cnt;
        }
    }
    // mirror the strict lower triangle
    for (int a = 1; a < L; ++a) {
        for (int b = 0; b < a; ++b) {
            T.t3[static_cast<std::size_t>(a) * static_cast<std::size_t>(L) + static_cast<std::size_t>(b)] =
                T.t3[static_cast<std::size_t>(b) * static_cast<std::size_t>(L) + static_cast<std::size_t>(a)];
        }
    }
    return T;
}

Weight3Tables build_tables_reference(const FieldContext& ctx) {
    const int q = ctx.q;
    const int L = q - 1;

    Weight3Tables T;
    T.m = ctx.m;
    T.q = q;
    T.primitive_poly = ctx.primitive_poly;
    T.t2.assign(static_cast<std::size_t>(L), 0);
    T.t3.assign(static_cast<std::size_t>(L) * static_cast<std::size_t>(L), 0);

    for (int a = 0; a < L; ++a) {
        const Spectrum s = compute_spectrum(ctx, make_coeff_set(ctx.m, {0, a}), 3);
        T.t2[static_cast<std::size_t>(a)] = static_cast<std::uint32_t>(s.at(3));
    }
    for (int a = 0; a < L; ++a) {
        for (int b = a; b < L; ++b) {
            const Spectrum s = compute_spectrum(ctx, make_coeff_set(ctx.m, {0, a, b}), 3);
            const auto v = static_cast<std::uint32_t>(s.at(3));
            T.t3[static_cast<std::size_t>(a) * static_cast<std::size_t>(L) + static_cast<std::size_t>(b)] = v;
            T.t3[static_cast<std::size_t>(b) * static_cast<std::size_t>(L) + static_cast<std::size_t>(a)] = v;
        }
    }
    return T;
}

std::uint64_t s3_fast(const Weight3Tables& T, const CoeffSet& H, std::uint64_t* table_reads) {
    if (H.m != T.m) throw integrity_error("s3_fast: tables built for a different field");
    const int L = T.q - 1;
    const int dc = H.dc();
    const auto& a = H.exponents;

    std::uint64_t reads = 0;
    std::int64_t s3c = 0;
    for (int i = 0; i < dc - 1; ++i) {
        for (int j = i + 1; j < dc; ++j) {
            int d = (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]) % L;
            if (d < 0) d += L;
            s3c += T.t2_at(d);
            ++reads;
        }
    }
    std::int64_t s3t = 0;
    for (int i = 0; i < dc - 2; ++i) {
        for (int j = i + 1; j < dc - 1; ++j) {
            int dj = (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(i)]) % L;
            if (dj < 0) dj += L;
            for (int k = j + 1; k < dc; ++k) {
                int dk = (a[static_cast<std::size_t>(k)] - a[static_cast<std::size_t>(i)]) % L;
                if (dk < 0) dk += L;
                s3t += T.t3_at(dj, dk);
                ++reads;
            }
        }
    }
    if (table_reads) *table_reads += reads;

    const std::int64_t s3 = s3t - static_cast<std::int64_t>(dc - 3) * s3c;
    if (s3 < 0) throw integrity_error("s3_fast: negative count (corrupt tables?)");
    return static_cast<std::uint64_t>(s3);
}

// --- cache persistence -------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'N', 'B', 'T', '3'};
constexpr std::uint16_t kVersion = 1;

void put_u16(std::string& out, std::uint16_t v) {
    out.push_back(static_cast<char>(v & 0xFF));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint16_t get_u16(const unsigned char* p) {
    return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

std::uint32_t get_u32(const unsigned char* p) {
    return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
           (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

}  // namespace

void save_tables(const Weight3Tables& T, const std::filesystem::path& path) {
    const std::size_t L = static_cast<std::size_t>(T.q - 1);
    std::string blob;
    blob.reserve(12 + 4 * (L + L * L));
    blob.append(kMagic, 4);
    put_u16(blob, kVersion);
    blob.push_back(static_cast<char>(T.m));
    put_u16(blob, T.primitive_poly);
    blob.append(3, '\0');
    for (std::uint32_t v : T.t2) put_u32(blob, v);
    for (std::uint32_t v : T.t3) put_u32(blob, v);

    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw integrity_error("cannot open " + path.string() + " for writing");
    const std::size_t written = std::fwrite(blob.data(), 1, blob.size(), f);
    std::fclose(f);
    if (written != blob.size()) throw integrity_error("short write to " + path.string());
}

Weight3Tables load_tables(const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "rb");
    if (!f) throw integrity_error("cannot open table cache " + path.string());
    std::string blob;
    char buf[1 << 16];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) blob.append(buf, n);
    std::fclose(f);

    if (blob.size() < 12 || std::memcmp(blob.data(), kMagic, 4) != 0) {
        throw integrity_error("table cache " + path.string() + ": bad magic");
    }
    const auto* p = reinterpret_cast<const unsigned char*>(blob.data());
    if (get_u16(p + 4) != kVersion) {
        throw integrity_error("table cache " + path.string() + ": unsupported version " +
                              std::to_string(get_u16(p + 4)));
    }
    Weight3Tables T;
    T.m = p[6];
    if (T.m < 3 || T.m > 10) throw integrity_error("table cache " + path.string() + ": bad field degree");
    T.q = 1 << T.m;
    T.primitive_poly = get_u16(p + 7);
    const std::size_t L = static_cast<std::size_t>(T.q - 1);
    const std::size_t expect = 12 + 4 * (L + L * L);
    if (blob.size() != expect) {
        throw integrity_error("table cache " + path.string() + ": wrong size (" +
                              std::to_string(blob.size()) + " vs " + std::to_string(expect) + ")");
    }
    T.t2.resize(L);
    T.t3.resize(L * L);
    const unsigned char* cursor = p + 12;
    for (std::size_t i = 0; i < L; ++i, cursor += 4) T.t2[i] = get_u32(cursor);
    for (std::size_t i = 0; i < L * L; ++i, cursor += 4) T.t3[i] = get_u32(cursor);
    return T;
}

Weight3Tables load_or_build(const FieldContext& ctx,
                            const std::optional<std::filesystem::path>& path) {
    if (path && std::filesystem::exists(*path)) {
        Weight3Tables T = load_tables(*path);
        if (T.m != ctx.m || T.primitive_poly != ctx.primitive_poly) {
            throw integrity_error("table cache " + path->string() +
                                  " was built for a different field (m=" + std::to_string(T.m) +
                                  ", poly=0x" + std::to_string(T.primitive_poly) + ")");
        }
        return T;
    }
    Weight3Tables T = build_tables(ctx);
    if (path) save_tables(T, *path);
    return T;
}

}  // namespace nbpc
