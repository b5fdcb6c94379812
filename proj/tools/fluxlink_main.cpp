#include <iostream>

int main(int argc, char** argv) {
    (void)argc;
    (void)argv;
    std::cerr << "fluxlink: command dispatch not wired up yet\n";
    return 1;
}
