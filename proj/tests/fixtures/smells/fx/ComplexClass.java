package fx;

class ComplexClass {
    int classify(int a, int b) {
        int r = 0;
        if (a > 0) r++;
        if (a > 10) r++;
        if (b > 0) r++;
        if (b > 10) r++;
        for (int i = 0; i < a; i++) r++;
        while (r > 100) r--;
        switch (b) {
            case 1: r += 1; break;
            case 2: r += 2; break;
            case 3: r += 3; break;
            default: r = 0;
        }
        return a > b ? r : -r;
    }

    int one() { return 1; }
    int two() { return 2; }
    int three() { return 3; }
}
