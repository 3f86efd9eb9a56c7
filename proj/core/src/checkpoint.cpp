#include "turblab/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace turblab {

namespace {

// The build targets little-endian hosts; the format is defined little-endian.
template <class T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw IoError("checkpoint: truncated file");
    return v;
}

std::vector<std::uint32_t> spatial_dims(const Domain& dom) {
    if (const auto* box = std::get_if<PeriodicBox>(&dom)) {
        std::vector<std::uint32_t> d = {static_cast<std::uint32_t>(box->n[0]),
                                        static_cast<std::uint32_t>(box->n[1])};
        if (box->dim == 3) d.push_back(static_cast<std::uint32_t>(box->n[2]));
        return d;
    }
    if (const auto* strip = std::get_if<StripDomain>(&dom))
        return {static_cast<std::uint32_t>(strip->nx), static_cast<std::uint32_t>(strip->ny)};
    const auto& ch = std::get<ChannelDomain>(dom);
    return {static_cast<std::uint32_t>(ch.nx), static_cast<std::uint32_t>(ch.nz_nodes())};
}

std::vector<double> domain_params(const Domain& dom) {
    if (const auto* box = std::get_if<PeriodicBox>(&dom))
        return {static_cast<double>(box->dim), box->side[0], box->side[1], box->side[2]};
    if (const auto* strip = std::get_if<StripDomain>(&dom)) return {strip->x_extent};
    return {std::get<ChannelDomain>(dom).period};
}

Domain domain_from(std::uint8_t tag, const std::vector<std::uint32_t>& dims,
                   std::ifstream& is) {
    if (tag == 0) {
        const int dim = static_cast<int>(get<double>(is));
        std::array<double, 3> side{get<double>(is), get<double>(is), get<double>(is)};
        std::array<int, 3> n{static_cast<int>(dims[0]), static_cast<int>(dims[1]),
                             dim == 3 ? static_cast<int>(dims[2]) : 1};
        return PeriodicBox(dim, side, n);
    }
    if (tag == 1) {
        const double x_extent = get<double>(is);
        return StripDomain(x_extent, static_cast<int>(dims[0]), static_cast<int>(dims[1]));
    }
    if (tag == 2) {
        const double period = get<double>(is);
        return ChannelDomain(period, static_cast<int>(dims[0]),
                             static_cast<int>(dims[1]) - 1);
    }
    throw IoError("checkpoint: unknown domain tag");
}

void write_header(std::ofstream& os, const Domain& dom, int ncomp) {
    os.write("TLB1", 4);
    auto dims = spatial_dims(dom);
    const std::uint32_t rank =
        static_cast<std::uint32_t>(dims.size()) + (ncomp > 0 ? 1 : 0);
    put(os, rank);
    if (ncomp > 0) put(os, static_cast<std::uint32_t>(ncomp));
    for (auto d : dims) put(os, d);
    put(os, domain_kind_tag(dom));
    for (double p : domain_params(dom)) put(os, p);
}

void write_meta(const std::string& path, const Metadata& meta) {
    if (meta.empty()) return;
    std::ofstream os(path + ".meta");
    if (!os) throw IoError("checkpoint: cannot write sidecar for " + path);
    for (const auto& [k, v] : meta) os << k << ": " << v << "\n";
}

struct Header {
    Domain dom{PeriodicBox{}};
    int ncomp = 0;  // 0 for scalar files
    std::vector<std::uint32_t> dims;
};

Header read_header(std::ifstream& is, bool expect_vector) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "TLB1", 4) != 0)
        throw IoError("checkpoint: bad magic");
    const auto rank = get<std::uint32_t>(is);
    if (rank < 2 || rank > 4) throw IoError("checkpoint: bad rank");
    std::vector<std::uint32_t> alldims(rank);
    for (auto& d : alldims) d = get<std::uint32_t>(is);
    const auto tag = get<std::uint8_t>(is);

    Header h;
    // Decide whether dims[0] is a component axis: scalar periodic boxes have
    // rank 2 or 3, vector files carry one extra leading dim.
    std::vector<std::uint32_t> sdims = alldims;
    if (expect_vector) {
        h.ncomp = static_cast<int>(alldims[0]);
        sdims.erase(sdims.begin());
        if (h.ncomp < 1 || h.ncomp > 3) throw IoError("checkpoint: bad component count");
    }
    h.dims = sdims;
    h.dom = domain_from(tag, sdims, is);
    return h;
}

}  // namespace

void write_checkpoint(const std::string& path, const ScalarField& f, const Metadata& meta) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("checkpoint: cannot open " + path);
    write_header(os, f.domain(), 0);
    os.write(reinterpret_cast<const char*>(f.data()),
             static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!os) throw IoError("checkpoint: write failed for " + path);
    write_meta(path, meta);
}

void write_checkpoint(const std::string& path, const VectorField& v, const Metadata& meta) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("checkpoint: cannot open " + path);
    write_header(os, v.domain(), v.ncomp());
    for (int c = 0; c < v.ncomp(); ++c)
        os.write(reinterpret_cast<const char*>(v.comp(c).data()),
                 static_cast<std::streamsize>(v.comp(c).size() * sizeof(double)));
    if (!os) throw IoError("checkpoint: write failed for " + path);
    write_meta(path, meta);
}

ScalarField read_scalar_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("checkpoint: cannot open " + path);
    Header h = read_header(is, false);
    ScalarField f(h.dom);
    is.read(reinterpret_cast<char*>(f.data()),
            static_cast<std::streamsize>(f.size() * sizeof(double)));
    if (!is) throw IoError("checkpoint: truncated payload in " + path);
    return f;
}

VectorField read_vector_checkpoint(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("checkpoint: cannot open " + path);
    Header h = read_header(is, true);
    VectorField v(h.dom, h.ncomp);
    for (int c = 0; c < h.ncomp; ++c) {
        is.read(reinterpret_cast<char*>(v.comp(c).data()),
                static_cast<std::streamsize>(v.comp(c).size() * sizeof(double)));
    }
    if (!is) throw IoError("checkpoint: truncated payload in " + path);
    return v;
}

Metadata read_metadata(const std::string& path) {
    std::ifstream is(path + ".meta");
    Metadata meta;
    std::string line;
    while (std::getline(is, line)) {
        const auto pos = line.find(": ");
        if (pos == std::string::npos) continue;
        meta[line.substr(0, pos)] = line.substr(pos + 2);
    }
    return meta;
}

}  // namespace turblab
