void main()
{
    int i;
    int a[64];

#pragma omp parallel num_threads(4) default(shared)
    {
#pragma omp for schedule(static)
        for (i = 0; i < 64; i = i + 1) {
            a[i] = i;
        }
    }
}
