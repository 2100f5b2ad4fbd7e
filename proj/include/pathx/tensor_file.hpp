#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "pathx/numeric.hpp"

namespace pathx {

enum class TensorFileErrc {
    MissingFile,
    BadMagic,
    BadVersion,
    Corrupt,
    ChecksumMismatch,
    MissingTensor,
    ShapeMismatch,
};

struct TensorFileError : InputError {
    TensorFileErrc code;
    TensorFileError(TensorFileErrc c, const std::string& msg) : InputError(msg), code(c) {}
};

struct NamedTensor {
    std::string name;
    std::vector<std::size_t> shape;
    std::vector<double> values;

    std::size_t element_count() const;
};

// Versioned binary container for model weights:
//   magic "PXTF", u32 version, u64 header length, JSON header
//   (meta key/values + per-tensor name/shape/offset table),
//   data blob of little-endian 64-bit floats, trailing FNV-1a64 checksum
// of everything before it.
class TensorFile {
  public:
    std::map<std::string, std::string> meta;

    void add(const std::string& name, std::vector<std::size_t> shape, std::vector<double> values);

    bool has(const std::string& name) const;
    // Fetch by name; throws MissingTensor / ShapeMismatch naming the tensor.
    const NamedTensor& get(const std::string& name) const;
    const std::vector<double>& get(const std::string& name,
                                   const std::vector<std::size_t>& expected_shape) const;
    Matrix get_matrix(const std::string& name, std::size_t rows, std::size_t cols) const;

    const std::vector<NamedTensor>& tensors() const { return tensors_; }

    std::string meta_value(const std::string& key) const;
    long meta_long(const std::string& key) const;

    void save(const std::filesystem::path& path) const;
    static TensorFile load(const std::filesystem::path& path);

  private:
    std::vector<NamedTensor> tensors_;
};

}  // namespace pathx
