#pragma once

#include <map>
#include <string>

#include "turblab/field.hpp"

namespace turblab {

/// Binary field checkpoint, little-endian:
///   magic "TLB1"; u32 rank; u32 dims[rank]; u8 domain-kind tag;
///   f64 domain parameters; f64 payload row-major.
/// Vector fields store rank = 1 + spatial rank with dims[0] = ncomp.
/// A text sidecar "<path>.meta" holds "key: value" lines.
using Metadata = std::map<std::string, std::string>;

void write_checkpoint(const std::string& path, const ScalarField& f,
                      const Metadata& meta = {});
void write_checkpoint(const std::string& path, const VectorField& v,
                      const Metadata& meta = {});

ScalarField read_scalar_checkpoint(const std::string& path);
VectorField read_vector_checkpoint(const std::string& path);
Metadata read_metadata(const std::string& path);

}  // namespace turblab
