class Sample {
    int drain(int n) {
        do {
            n = n - 1;
        } while (n > 0);
        return n;
    }
}
