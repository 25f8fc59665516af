#include <cstdio>

int main() {
    std::puts("hyperorient: subcommands not wired up yet");
    return 1;
}
