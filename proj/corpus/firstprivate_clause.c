int seed;

void main()
{
#pragma omp parallel firstprivate(seed)
    {
        seed = seed + 1;
    }
}
