#pragma once

#include <doctest.h>

#include <intervalkit/errors.hpp>
#include <intervalkit/interval.hpp>

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <string>

// Checks that expr throws an intervalkit::Error carrying the given code.
#define CHECK_THROWS_AS_CODE(expr, expected)                                                                   \
    do {                                                                                                       \
        bool thrown_ = false;                                                                                  \
        try {                                                                                                  \
            (void)(expr);                                                                                      \
        } catch (const ::intervalkit::Error& e_) {                                                             \
            thrown_ = true;                                                                                    \
            CHECK_MESSAGE(e_.code() == (expected), "got " << ::intervalkit::to_string(e_.code()));              \
        }                                                                                                      \
        CHECK_MESSAGE(thrown_, #expr " did not throw");                                                        \
    } while (false)

namespace test {

inline void near_interval(const intervalkit::ExtendedInterval& got, double lo, double hi, double tol = 1e-12)
{
    CHECK_MESSAGE(std::abs(got.lo - lo) <= tol, "lo " << got.lo << " want " << lo);
    CHECK_MESSAGE(std::abs(got.hi - hi) <= tol, "hi " << got.hi << " want " << hi);
}

// A fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    TempDir()
    {
        static std::atomic<int> counter{0};
        auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
        path_ = std::filesystem::temp_directory_path() /
                ("intervalkit_test_" + std::to_string(stamp) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    [[nodiscard]] const std::filesystem::path& path() const noexcept { return path_; }
    [[nodiscard]] std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

inline std::filesystem::path config(const std::string& name)
{
    return std::filesystem::path(INTERVALKIT_CONFIG_DIR) / name;
}

} // namespace test
