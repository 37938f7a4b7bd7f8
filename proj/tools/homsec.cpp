#include <iostream>

#include "homsec/homsec.hpp"

int main() {
    std::cout << "homsec placeholder\n";
    return 0;
}
