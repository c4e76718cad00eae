#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <set>

#include "dioph/serialize.hpp"

namespace dioph {

// Append-only JSONL file of verified integer solutions, deduplicated by
// canonical form.  An exclusive flock around read-check-append keeps the
// "single logical writer" promise even across processes.
class SolutionStore {
  public:
    explicit SolutionStore(std::string path) : path_(std::move(path)) {}

    static std::string default_path() {
        const char* env = std::getenv("DIOPH_STORE");
        return env && *env ? env : "solutions.jsonl";
    }

    const std::string& path() const { return path_; }

    // True if appended; false if a record with the same canonical form is
    // already present.  Only verified solutions are storable.
    bool append(const IntegerSolution& s) {
        if (!s.verified || !verify(s))
            throw contract_error("store: refusing to append an unverified solution");
        int fd = ::open(path_.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd < 0) throw error("store: cannot open " + path_ + ": " + std::strerror(errno));
        Guard guard(fd, LOCK_EX);
        std::string key = canonical_key(canonical_form(s));
        for (const IntegerSolution& old : parse_all(read_all(fd)))
            if (canonical_key(canonical_form(old)) == key) return false;
        std::string line = to_json(s).dump() + "\n";
        if (::lseek(fd, 0, SEEK_END) < 0 ||
            ::write(fd, line.data(), line.size()) != static_cast<ssize_t>(line.size()))
            throw error("store: short write to " + path_);
        return true;
    }

    std::vector<IntegerSolution> load() const {
        int fd = ::open(path_.c_str(), O_RDONLY);
        if (fd < 0) {
            if (errno == ENOENT) return {};
            throw error("store: cannot open " + path_ + ": " + std::strerror(errno));
        }
        Guard guard(fd, LOCK_SH);
        return parse_all(read_all(fd));
    }

  private:
    struct Guard {
        int fd;
        Guard(int fd_, int op) : fd(fd_) { ::flock(fd, op); }
        ~Guard() {
            ::flock(fd, LOCK_UN);
            ::close(fd);
        }
    };

    static std::string read_all(int fd) {
        std::string out;
        char buf[1 << 16];
        ::lseek(fd, 0, SEEK_SET);
        for (;;) {
            ssize_t n = ::read(fd, buf, sizeof buf);
            if (n < 0) throw error("store: read failed");
            if (n == 0) break;
            out.append(buf, static_cast<size_t>(n));
        }
        return out;
    }

    static std::vector<IntegerSolution> parse_all(const std::string& content) {
        std::vector<IntegerSolution> out;
        size_t pos = 0, lineno = 0;
        while (pos < content.size()) {
            size_t end = content.find('\n', pos);
            if (end == std::string::npos) end = content.size();
            ++lineno;
            std::string line = content.substr(pos, end - pos);
            pos = end + 1;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                out.push_back(integer_solution_from_json(Json::parse(line)));
            } catch (const std::exception& ex) {
                throw std::invalid_argument("store line " + std::to_string(lineno) + ": " +
                                            ex.what());
            }
        }
        return out;
    }

    std::string path_;
};

} // namespace dioph
