#include <cstdio>

int main() {
    std::puts("turblab: CLI wiring pending");
    return 0;
}
