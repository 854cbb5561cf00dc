void main()
{
#pragma omp parallel
    {
        int i;
        int j;
        int t;
        t = 0;
        for (i = 0; i < 2; i = i + 1) {
            for (j = 0; j < 3; j = j + 1) {
#pragma omp barrier
                t = t + 1;
            }
        }
    }
}
