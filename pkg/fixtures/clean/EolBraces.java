class EolBraces {
    private int hits;

    int touch(int n) {
        while (n > 0) {
            hits += n;
            n--;
        }
        return hits;
    }
}
