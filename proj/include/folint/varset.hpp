#ifndef FOLINT_VARSET_HPP
#define FOLINT_VARSET_HPP

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "folint/errors.hpp"

namespace folint {

// Fixed ordered list of variable names. Every polynomial carries one; mixing
// values over different sets is a structural error, never a silent promotion.
class VarSet {
public:
    VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}
    VarSet(std::initializer_list<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(names)) { check_(); }
    explicit VarSet(std::vector<std::string> names)
        : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) { check_(); }

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return names_->at(i); }
    const std::vector<std::string>& names() const { return *names_; }

    bool has(const std::string& v) const {
        for (const auto& n : *names_)
            if (n == v) return true;
        return false;
    }

    std::size_t index(const std::string& v) const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            if ((*names_)[i] == v) return i;
        throw structural_error("variable '" + v + "' not in variable set {" + str() + "}");
    }

    friend bool operator==(const VarSet& a, const VarSet& b) {
        return a.names_ == b.names_ || *a.names_ == *b.names_;
    }
    friend bool operator!=(const VarSet& a, const VarSet& b) { return !(a == b); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < names_->size(); ++i) {
            if (i) s += ",";
            s += (*names_)[i];
        }
        return s;
    }

private:
    void check_() const {
        for (std::size_t i = 0; i < names_->size(); ++i)
            for (std::size_t j = i + 1; j < names_->size(); ++j)
                if ((*names_)[i] == (*names_)[j])
                    throw structural_error("duplicate variable '" + (*names_)[i] + "'");
    }
    std::shared_ptr<const std::vector<std::string>> names_;
};

}  // namespace folint

#endif
