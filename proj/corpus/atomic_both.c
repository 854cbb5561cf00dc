int hits;

void main()
{
#pragma omp parallel
    {
#pragma omp atomic
        hits = hits + 1;
    }
}
