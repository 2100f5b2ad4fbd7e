#include "pathx/tensor_file.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "pathx/csv.hpp"

namespace pathx {

namespace {

constexpr char kMagic[4] = {'P', 'X', 'T', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t read_u32(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::uint64_t read_u64(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

std::string shape_string(const std::vector<std::size_t>& shape) {
    std::string s = "[";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) s += "x";
        s += std::to_string(shape[i]);
    }
    return s + "]";
}

}  // namespace

std::size_t NamedTensor::element_count() const {
    std::size_t n = 1;
    for (auto d : shape) n *= d;
    return n;
}

void TensorFile::add(const std::string& name, std::vector<std::size_t> shape,
                     std::vector<double> values) {
    NamedTensor t{name, std::move(shape), std::move(values)};
    if (t.element_count() != t.values.size())
        throw std::invalid_argument("tensor '" + name + "': shape does not match value count");
    tensors_.push_back(std::move(t));
}

bool TensorFile::has(const std::string& name) const {
    for (const auto& t : tensors_)
        if (t.name == name) return true;
    return false;
}

const NamedTensor& TensorFile::get(const std::string& name) const {
    for (const auto& t : tensors_)
        if (t.name == name) return t;
    throw TensorFileError(TensorFileErrc::MissingTensor, "missing tensor '" + name + "'");
}

const std::vector<double>& TensorFile::get(const std::string& name,
                                           const std::vector<std::size_t>& expected_shape) const {
    const auto& t = get(name);
    if (t.shape != expected_shape)
        throw TensorFileError(TensorFileErrc::ShapeMismatch,
                              "tensor '" + name + "': expected shape " + shape_string(expected_shape) +
                                  ", file has " + shape_string(t.shape));
    return t.values;
}

Matrix TensorFile::get_matrix(const std::string& name, std::size_t rows, std::size_t cols) const {
    Matrix m(rows, cols);
    m.data = get(name, {rows, cols});
    return m;
}

std::string TensorFile::meta_value(const std::string& key) const {
    auto it = meta.find(key);
    if (it == meta.end())
        throw TensorFileError(TensorFileErrc::Corrupt, "missing header field '" + key + "'");
    return it->second;
}

long TensorFile::meta_long(const std::string& key) const { return parse_long(meta_value(key)); }

void TensorFile::save(const std::filesystem::path& path) const {
    nlohmann::json header;
    header["meta"] = meta;
    auto& table = header["tensors"] = nlohmann::json::array();
    std::size_t offset = 0;  // element offset into the data blob
    for (const auto& t : tensors_) {
        table.push_back({{"name", t.name}, {"shape", t.shape}, {"offset", offset}});
        offset += t.values.size();
    }
    std::string header_json = header.dump();

    std::string out;
    out.reserve(24 + header_json.size() + offset * 8 + 8);
    out.append(kMagic, 4);
    put_u32(out, kVersion);
    put_u64(out, header_json.size());
    out += header_json;
    for (const auto& t : tensors_) {
        for (double v : t.values) {
            static_assert(sizeof(double) == 8);
            std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
            put_u64(out, bits);
        }
    }
    put_u64(out, fnv1a64(out.data(), out.size()));
    write_text_file(path, out);
}

TensorFile TensorFile::load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw TensorFileError(TensorFileErrc::MissingFile, "weights file not found: " + path.string());
    auto bytes = read_binary_file(path);
    if (bytes.size() < 24 + 8)
        throw TensorFileError(TensorFileErrc::Corrupt, "file too short: " + path.string());
    if (std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw TensorFileError(TensorFileErrc::BadMagic, "bad magic in " + path.string());
    std::uint32_t version = read_u32(bytes.data() + 4);
    if (version != kVersion)
        throw TensorFileError(TensorFileErrc::BadVersion,
                              "unsupported container version " + std::to_string(version));

    std::uint64_t stored_sum = read_u64(bytes.data() + bytes.size() - 8);
    std::uint64_t actual_sum = fnv1a64(bytes.data(), bytes.size() - 8);
    if (stored_sum != actual_sum)
        throw TensorFileError(TensorFileErrc::ChecksumMismatch,
                              "checksum mismatch in " + path.string());

    std::uint64_t header_len = read_u64(bytes.data() + 8);
    if (16 + header_len + 8 > bytes.size())
        throw TensorFileError(TensorFileErrc::Corrupt, "truncated header in " + path.string());

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(bytes.begin() + 16, bytes.begin() + 16 + header_len);
    } catch (const nlohmann::json::exception&) {
        throw TensorFileError(TensorFileErrc::Corrupt, "unparseable header in " + path.string());
    }

    TensorFile file;
    const unsigned char* blob = bytes.data() + 16 + header_len;
    std::size_t blob_elems = (bytes.size() - 16 - header_len - 8) / 8;
    try {
        file.meta = header.at("meta").get<std::map<std::string, std::string>>();
        for (const auto& entry : header.at("tensors")) {
            NamedTensor t;
            t.name = entry.at("name").get<std::string>();
            t.shape = entry.at("shape").get<std::vector<std::size_t>>();
            std::size_t offset = entry.at("offset").get<std::size_t>();
            std::size_t count = t.element_count();
            if (offset + count > blob_elems)
                throw TensorFileError(TensorFileErrc::Corrupt,
                                      "tensor '" + t.name + "' extends past end of data");
            t.values.resize(count);
            for (std::size_t i = 0; i < count; ++i)
                t.values[i] = std::bit_cast<double>(read_u64(blob + (offset + i) * 8));
            file.tensors_.push_back(std::move(t));
        }
    } catch (const nlohmann::json::exception&) {
        throw TensorFileError(TensorFileErrc::Corrupt, "malformed header in " + path.string());
    }
    return file;
}

}  // namespace pathx
